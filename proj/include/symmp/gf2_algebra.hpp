#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symmp::gf2 {

struct AlgebraData;
class GradedAlgebra;

/// Element of a finite graded algebra over GF(2), one bit-vector per degree.
class GradedElement {
 public:
  GradedAlgebra algebra() const;

  bool is_zero() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const noexcept;
  GradedElement component(int degree) const;
  /// Bits of the degree-d part, bit i standing for the i-th basis element of that degree.
  std::uint64_t bits(int degree) const;

  std::string to_string() const;

  friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend bool operator==(const GradedElement& a, const GradedElement& b);

 private:
  friend class GradedAlgebra;
  friend class AlgebraMap;
  GradedElement(std::shared_ptr<const AlgebraData> alg, std::vector<std::uint64_t> bits)
      : alg_(std::move(alg)), bits_(std::move(bits)) {}

  std::shared_ptr<const AlgebraData> alg_;
  std::vector<std::uint64_t> bits_;
};

/// Finite graded commutative GF(2)-algebra given by a basis and a product table.
class GradedAlgebra {
 public:
  struct BasisSpec {
    std::string label;
    int degree;
    /// Generator indices whose product is this basis element (empty for the unit).
    std::vector<int> word;
  };
  /// Product of basis elements i and j as a list of basis indices (their sum).
  struct TableEntry {
    int i;
    int j;
    std::vector<int> product;
  };

  /// Basis index 0 must be the unit in degree 0. Entries are symmetrized, and
  /// products with the unit are implied. Throws std::invalid_argument on
  /// non-additive degrees or words that disagree with the table.
  static GradedAlgebra build(std::string name, std::vector<BasisSpec> basis, std::vector<int> generators,
                             const std::vector<TableEntry>& table);

  const std::string& name() const noexcept;
  int top_degree() const noexcept;
  int dim(int degree) const noexcept;
  int total_dim() const noexcept;

  GradedElement zero() const;
  GradedElement one() const;
  /// Basis element by global index (ordered by degree) or by label.
  GradedElement basis(int index) const;
  GradedElement basis(const std::string& label) const;
  const std::string& label(int index) const;
  int degree_of(int index) const;
  const std::vector<int>& word(int index) const;
  const std::vector<int>& generators() const noexcept;

  /// Homogeneous element of the given degree from its bits.
  GradedElement from_bits(int degree, std::uint64_t bits) const;

 private:
  friend class GradedElement;
  friend class AlgebraMap;
  explicit GradedAlgebra(std::shared_ptr<const AlgebraData> data) : data_(std::move(data)) {}
  std::shared_ptr<const AlgebraData> data_;
};

/// Catalog rings are built once; repeated calls return the same algebra.
/// H*(T) = GF(2)[alpha, beta] / (alpha^2, beta^2), gamma = alpha beta.
GradedAlgebra torus_ring();
/// H*(K): kappa lambda = 0, kappa^2 = lambda^2 = mu.
GradedAlgebra klein_ring();
/// Cohomology of a point: GF(2) in degree 0.
GradedAlgebra point_ring();
/// A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb' and labels "a⊗b".
GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b);

/// Ring homomorphism determined by images of the source generators.
class AlgebraMap {
 public:
  /// Throws RelationViolated unless the extension along basis words is
  /// degree-preserving and multiplicative on every pair of basis elements.
  AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<GradedElement> generator_images);

  const GradedAlgebra& source() const noexcept { return source_; }
  const GradedAlgebra& target() const noexcept { return target_; }

  GradedElement operator()(const GradedElement& x) const;
  /// Column j is the image of the j-th degree-d source basis element.
  std::vector<std::uint64_t> matrix(int degree) const;

 private:
  GradedAlgebra source_;
  GradedAlgebra target_;
  std::vector<GradedElement> basis_images_;
};

/// pi^*: H*(K) -> H*(T), kappa, lambda -> alpha + beta.
AlgebraMap pi_star();
/// (1, pi)^*: H*(T) (x) H*(K) -> H*(T), u (x) v -> u pi^*(v).
AlgebraMap one_pi_star();
/// The map H*(T) -> H*(point) induced by a point inclusion.
AlgebraMap torus_to_point();

/// GF(2) null-space basis of the degree-d part of m.
std::vector<GradedElement> kernel(const AlgebraMap& m, int degree);

struct CupLengthResult {
  int length = 0;
  std::vector<GradedElement> witness;
  std::optional<GradedElement> product;
};

/// Largest m <= max_m with a nonzero product of m homogeneous positive-degree
/// elements drawn from the spans of `ideal_basis[d]` (index d = degree).
/// Exhaustive; factors are enumerated as multisets in increasing degree.
CupLengthResult ideal_cup_length(const GradedAlgebra& algebra, const std::vector<std::vector<GradedElement>>& ideal_basis,
                                 int max_m);

/// Cup length of the kernel of m.
CupLengthResult kernel_cup_length(const AlgebraMap& m, int max_m);

}  // namespace symmp::gf2
