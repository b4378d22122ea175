#include "symmp/gf2_algebra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "symmp/errors.hpp"

namespace symmp::gf2 {

struct AlgebraData {
  std::string name;
  int top = 0;
  std::vector<GradedAlgebra::BasisSpec> basis;  // sorted by degree
  std::vector<int> first_of_degree;             // size top + 2
  std::vector<int> generators;
  // table[i][j] = bits per degree of basis_i * basis_j
  std::vector<std::vector<std::vector<std::uint64_t>>> table;

  int position(int index) const { return index - first_of_degree[basis[index].degree]; }
  int dim(int d) const { return d < 0 || d > top ? 0 : first_of_degree[d + 1] - first_of_degree[d]; }
};

namespace {

std::vector<std::uint64_t> zero_bits(const AlgebraData& a) { return std::vector<std::uint64_t>(a.top + 1, 0); }

void require_same(const std::shared_ptr<const AlgebraData>& a, const std::shared_ptr<const AlgebraData>& b) {
  if (a != b) throw std::invalid_argument("elements belong to different algebras");
}

}  // namespace

// ---------------------------------------------------------------- elements

GradedAlgebra GradedElement::algebra() const { return GradedAlgebra(alg_); }

bool GradedElement::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t b) { return b == 0; });
}

bool GradedElement::is_homogeneous() const noexcept {
  return std::count_if(bits_.begin(), bits_.end(), [](std::uint64_t b) { return b != 0; }) <= 1;
}

std::optional<int> GradedElement::degree() const noexcept {
  if (is_zero() || !is_homogeneous()) return std::nullopt;
  for (std::size_t d = 0; d < bits_.size(); ++d)
    if (bits_[d] != 0) return static_cast<int>(d);
  return std::nullopt;
}

GradedElement GradedElement::component(int degree) const {
  auto bits = zero_bits(*alg_);
  if (degree >= 0 && degree <= alg_->top) bits[degree] = bits_[degree];
  return GradedElement(alg_, std::move(bits));
}

std::uint64_t GradedElement::bits(int degree) const { return degree < 0 || degree > alg_->top ? 0 : bits_[degree]; }

std::string GradedElement::to_string() const {
  std::string out;
  for (int d = 0; d <= alg_->top; ++d) {
    for (int p = 0; p < alg_->dim(d); ++p) {
      if ((bits_[d] >> p) & 1u) {
        if (!out.empty()) out += " + ";
        out += alg_->basis[alg_->first_of_degree[d] + p].label;
      }
    }
  }
  return out.empty() ? "0" : out;
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  require_same(a.alg_, b.alg_);
  auto bits = a.bits_;
  for (std::size_t d = 0; d < bits.size(); ++d) bits[d] ^= b.bits_[d];
  return GradedElement(a.alg_, std::move(bits));
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  require_same(a.alg_, b.alg_);
  const AlgebraData& alg = *a.alg_;
  auto bits = zero_bits(alg);
  for (int da = 0; da <= alg.top; ++da) {
    for (std::uint64_t ra = a.bits_[da]; ra != 0; ra &= ra - 1) {
      int i = alg.first_of_degree[da] + std::countr_zero(ra);
      for (int db = 0; db + da <= alg.top; ++db) {
        for (std::uint64_t rb = b.bits_[db]; rb != 0; rb &= rb - 1) {
          int j = alg.first_of_degree[db] + std::countr_zero(rb);
          const auto& prod = alg.table[i][j];
          for (std::size_t d = 0; d < bits.size(); ++d) bits[d] ^= prod[d];
        }
      }
    }
  }
  return GradedElement(a.alg_, std::move(bits));
}

bool operator==(const GradedElement& a, const GradedElement& b) { return a.alg_ == b.alg_ && a.bits_ == b.bits_; }

// ---------------------------------------------------------------- algebras

GradedAlgebra GradedAlgebra::build(std::string name, std::vector<BasisSpec> basis, std::vector<int> generators,
                                   const std::vector<TableEntry>& table) {
  if (basis.empty() || basis[0].degree != 0) throw std::invalid_argument("basis 0 must be the unit in degree 0");
  if (!std::is_sorted(basis.begin(), basis.end(), [](const auto& l, const auto& r) { return l.degree < r.degree; }))
    throw std::invalid_argument("basis must be ordered by degree");

  auto data = std::make_shared<AlgebraData>();
  data->name = std::move(name);
  data->top = basis.back().degree;
  data->basis = std::move(basis);
  data->generators = std::move(generators);
  data->first_of_degree.assign(data->top + 2, 0);
  for (const auto& b : data->basis) data->first_of_degree[b.degree + 1]++;
  for (int d = 0; d <= data->top; ++d) {
    if (data->first_of_degree[d + 1] > 64) throw std::invalid_argument("at most 64 basis elements per degree");
    data->first_of_degree[d + 1] += data->first_of_degree[d];
  }

  const int n = static_cast<int>(data->basis.size());
  data->table.assign(n, std::vector<std::vector<std::uint64_t>>(n, zero_bits(*data)));
  auto set = [&](int i, int j, const std::vector<int>& prod) {
    auto& cell = data->table[i][j];
    std::fill(cell.begin(), cell.end(), 0);
    for (int r : prod) {
      int d = data->basis.at(r).degree;
      if (d != data->basis[i].degree + data->basis[j].degree)
        throw std::invalid_argument("product of " + data->basis[i].label + " and " + data->basis[j].label +
                                    " is not in the additive degree");
      cell[d] ^= std::uint64_t{1} << data->position(r);
    }
  };
  for (int i = 0; i < n; ++i) {
    set(0, i, {i});
    set(i, 0, {i});
  }
  for (const auto& e : table) {
    set(e.i, e.j, e.product);
    set(e.j, e.i, e.product);
  }

  GradedAlgebra alg(data);
  for (int i = 0; i < n; ++i) {
    GradedElement w = alg.one();
    for (int g : data->basis[i].word) w = w * alg.basis(data->generators.at(g));
    if (!(w == alg.basis(i))) throw std::invalid_argument("word of " + data->basis[i].label + " disagrees with the table");
  }
  return alg;
}

const std::string& GradedAlgebra::name() const noexcept { return data_->name; }
int GradedAlgebra::top_degree() const noexcept { return data_->top; }
int GradedAlgebra::dim(int degree) const noexcept { return data_->dim(degree); }
int GradedAlgebra::total_dim() const noexcept { return static_cast<int>(data_->basis.size()); }
GradedElement GradedAlgebra::zero() const { return GradedElement(data_, zero_bits(*data_)); }
GradedElement GradedAlgebra::one() const { return basis(0); }

GradedElement GradedAlgebra::basis(int index) const {
  auto bits = zero_bits(*data_);
  const auto& b = data_->basis.at(index);
  bits[b.degree] = std::uint64_t{1} << data_->position(index);
  return GradedElement(data_, std::move(bits));
}

GradedElement GradedAlgebra::basis(const std::string& label) const {
  for (std::size_t i = 0; i < data_->basis.size(); ++i)
    if (data_->basis[i].label == label) return basis(static_cast<int>(i));
  throw std::invalid_argument("no basis element labelled '" + label + "' in " + data_->name);
}

const std::string& GradedAlgebra::label(int index) const { return data_->basis.at(index).label; }
int GradedAlgebra::degree_of(int index) const { return data_->basis.at(index).degree; }
const std::vector<int>& GradedAlgebra::word(int index) const { return data_->basis.at(index).word; }
const std::vector<int>& GradedAlgebra::generators() const noexcept { return data_->generators; }

GradedElement GradedAlgebra::from_bits(int degree, std::uint64_t bits) const {
  auto v = zero_bits(*data_);
  if (degree < 0 || degree > data_->top) {
    if (bits != 0) throw std::invalid_argument("degree out of range");
    return GradedElement(data_, std::move(v));
  }
  int dim = data_->dim(degree);
  if (dim < 64 && (bits >> dim) != 0) throw std::invalid_argument("bits exceed the degree's dimension");
  v[degree] = bits;
  return GradedElement(data_, std::move(v));
}

GradedAlgebra torus_ring() {
  static const GradedAlgebra ring = GradedAlgebra::build("H*(T)", {{"1", 0, {}}, {"alpha", 1, {0}}, {"beta", 1, {1}}, {"gamma", 2, {0, 1}}},
                                                         {1, 2}, {{1, 2, {3}}});
  return ring;
}

GradedAlgebra klein_ring() {
  static const GradedAlgebra ring = GradedAlgebra::build("H*(K)", {{"1", 0, {}}, {"kappa", 1, {0}}, {"lambda", 1, {1}}, {"mu", 2, {0, 0}}},
                                                         {1, 2}, {{1, 1, {3}}, {2, 2, {3}}});
  return ring;
}

GradedAlgebra point_ring() {
  static const GradedAlgebra ring = GradedAlgebra::build("H*(pt)", {{"1", 0, {}}}, {}, {});
  return ring;
}

GradedAlgebra tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  const int na = a.total_dim();
  const int nb = b.total_dim();
  const int ga = static_cast<int>(a.generators().size());

  struct Pair {
    int i;
    int j;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) pairs.push_back({i, j});
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& l, const Pair& r) {
    return a.degree_of(l.i) + b.degree_of(l.j) < a.degree_of(r.i) + b.degree_of(r.j);
  });
  std::vector<int> index_of(static_cast<std::size_t>(na * nb));
  for (std::size_t k = 0; k < pairs.size(); ++k) index_of[pairs[k].i * nb + pairs[k].j] = static_cast<int>(k);

  std::vector<GradedAlgebra::BasisSpec> basis;
  for (const Pair& p : pairs) {
    std::vector<int> word = a.word(p.i);
    for (int g : b.word(p.j)) word.push_back(ga + g);
    basis.push_back({a.label(p.i) + "⊗" + b.label(p.j), a.degree_of(p.i) + b.degree_of(p.j), std::move(word)});
  }

  std::vector<int> generators;
  for (int g : a.generators()) generators.push_back(index_of[g * nb]);
  for (int g : b.generators()) generators.push_back(index_of[g]);

  auto expand = [](const GradedElement& e) {
    std::vector<int> out;
    GradedAlgebra alg = e.algebra();
    for (int k = 0; k < alg.total_dim(); ++k) {
      int d = alg.degree_of(k);
      int offset = 0;
      while (offset < k && alg.degree_of(k - offset - 1) == d) ++offset;
      if ((e.bits(d) >> offset) & 1u) out.push_back(k);
    }
    return out;
  };

  std::vector<GradedAlgebra::TableEntry> table;
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    for (std::size_t r = l; r < pairs.size(); ++r) {
      auto left = expand(a.basis(pairs[l].i) * a.basis(pairs[r].i));
      auto right = expand(b.basis(pairs[l].j) * b.basis(pairs[r].j));
      std::vector<int> prod;
      for (int x : left)
        for (int y : right) prod.push_back(index_of[x * nb + y]);
      table.push_back({static_cast<int>(l), static_cast<int>(r), std::move(prod)});
    }
  }
  return GradedAlgebra::build(a.name() + "⊗" + b.name(), std::move(basis), std::move(generators), table);
}

// ---------------------------------------------------------------- maps

AlgebraMap::AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<GradedElement> generator_images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (generator_images.size() != source_.generators().size())
    throw RelationViolated("need one image per source generator");
  for (const auto& g : generator_images)
    if (g.alg_ != target_.data_) throw RelationViolated("generator image outside the target algebra");

  const int n = source_.total_dim();
  for (int i = 0; i < n; ++i) {
    GradedElement img = target_.one();
    for (int g : source_.word(i)) img = img * generator_images[g];
    if (!img.is_zero() && img.degree() != source_.degree_of(i))
      throw RelationViolated("image of " + source_.label(i) + " is not in degree " +
                             std::to_string(source_.degree_of(i)));
    basis_images_.push_back(std::move(img));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!((*this)(source_.basis(i) * source_.basis(j)) == basis_images_[i] * basis_images_[j]))
        throw RelationViolated("map is not multiplicative on " + source_.label(i) + " * " + source_.label(j));
    }
  }
}

GradedElement AlgebraMap::operator()(const GradedElement& x) const {
  if (x.alg_ != source_.data_) throw std::invalid_argument("element outside the source algebra");
  GradedElement out = target_.zero();
  const AlgebraData& src = *source_.data_;
  for (int d = 0; d <= src.top; ++d)
    for (std::uint64_t r = x.bits_[d]; r != 0; r &= r - 1)
      out = out + basis_images_[src.first_of_degree[d] + std::countr_zero(r)];
  return out;
}

std::vector<std::uint64_t> AlgebraMap::matrix(int degree) const {
  std::vector<std::uint64_t> cols;
  const AlgebraData& src = *source_.data_;
  for (int p = 0; p < src.dim(degree); ++p) cols.push_back(basis_images_[src.first_of_degree[degree] + p].bits(degree));
  return cols;
}

AlgebraMap pi_star() {
  GradedAlgebra t = torus_ring();
  GradedElement s = t.basis("alpha") + t.basis("beta");
  return AlgebraMap(klein_ring(), t, {s, s});
}

AlgebraMap one_pi_star() {
  GradedAlgebra t = torus_ring();
  static const GradedAlgebra tk = tensor(t, klein_ring());
  GradedElement s = t.basis("alpha") + t.basis("beta");
  return AlgebraMap(tk, t, {t.basis("alpha"), t.basis("beta"), s, s});
}

AlgebraMap torus_to_point() {
  GradedAlgebra pt = point_ring();
  return AlgebraMap(torus_ring(), pt, {pt.zero(), pt.zero()});
}

std::vector<GradedElement> kernel(const AlgebraMap& m, int degree) {
  struct Row {
    std::uint64_t value;
    std::uint64_t combo;
  };
  std::vector<Row> pivots;
  std::vector<GradedElement> out;
  auto cols = m.matrix(degree);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Row r{cols[j], std::uint64_t{1} << j};
    for (const Row& p : pivots)
      if (r.value & (p.value & -p.value)) {
        r.value ^= p.value;
        r.combo ^= p.combo;
      }
    if (r.value == 0) {
      out.push_back(m.source().from_bits(degree, r.combo));
    } else {
      // keep pivots fully reduced on their lowest set bit
      std::uint64_t low = r.value & -r.value;
      for (Row& p : pivots)
        if (p.value & low) {
          p.value ^= r.value;
          p.combo ^= r.combo;
        }
      pivots.push_back(r);
    }
  }
  return out;
}

CupLengthResult ideal_cup_length(const GradedAlgebra& algebra, const std::vector<std::vector<GradedElement>>& ideal_basis,
                                 int max_m) {
  std::vector<GradedElement> elements;
  std::vector<int> degrees;
  for (int d = 1; d < static_cast<int>(ideal_basis.size()) && d <= algebra.top_degree(); ++d) {
    const auto& span = ideal_basis[d];
    if (span.size() >= 20) throw std::invalid_argument("ideal span too large for exhaustive search");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << span.size()); ++mask) {
      GradedElement e = algebra.zero();
      for (std::size_t b = 0; b < span.size(); ++b)
        if ((mask >> b) & 1u) e = e + span[b];
      if (e.is_zero()) continue;
      elements.push_back(e);
      degrees.push_back(d);
    }
  }

  std::vector<int> chosen;
  std::function<std::optional<GradedElement>(std::size_t, int, const GradedElement&, int)> search =
      [&](std::size_t from, int remaining, const GradedElement& acc, int deg) -> std::optional<GradedElement> {
    if (remaining == 0) return acc;
    for (std::size_t k = from; k < elements.size(); ++k) {
      if (deg + degrees[k] * remaining > algebra.top_degree()) break;
      GradedElement next = acc * elements[k];
      if (next.is_zero()) continue;
      chosen.push_back(static_cast<int>(k));
      if (auto found = search(k, remaining - 1, next, deg + degrees[k])) return found;
      chosen.pop_back();
    }
    return std::nullopt;
  };

  for (int m = std::min(max_m, algebra.top_degree()); m >= 1; --m) {
    chosen.clear();
    if (auto product = search(0, m, algebra.one(), 0)) {
      CupLengthResult r;
      r.length = m;
      for (int k : chosen) r.witness.push_back(elements[k]);
      r.product = *product;
      return r;
    }
  }
  return {};
}

CupLengthResult kernel_cup_length(const AlgebraMap& m, int max_m) {
  const GradedAlgebra& src = m.source();
  std::vector<std::vector<GradedElement>> basis(src.top_degree() + 1);
  for (int d = 1; d <= src.top_degree(); ++d) basis[d] = kernel(m, d);
  return ideal_cup_length(src, basis, max_m);
}

}  // namespace symmp::gf2
