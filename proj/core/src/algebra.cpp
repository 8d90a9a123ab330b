#include "zdg/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace zdg {

std::string to_string(Length5Case c) {
  switch (c) {
    case Length5Case::PIR_CHAIN: return "PIR_CHAIN";
    case Length5Case::H131: return "H131";
    case Length5Case::H122: return "H122";
    case Length5Case::H1211: return "H1211";
  }
  return "?";
}

std::uint64_t max_enumeration_bound() {
  if (const char* env = std::getenv("ZDGLAB_MAX_ELEMS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1ull << 21;
}

FiniteAlgebra::FiniteAlgebra(Prime p, std::vector<std::string> basis_labels,
                             std::vector<std::vector<std::vector<u32>>> table,
                             std::vector<u32> one_vec)
    : p_(p),
      dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      table_(std::move(table)),
      one_(std::move(one_vec)) {
  if (dim_ == 0) throw std::invalid_argument("FiniteAlgebra: dim must be >= 1");
  if (table_.size() != dim_ || one_.size() != dim_)
    throw std::invalid_argument("FiniteAlgebra: table/one shape mismatch");
  for (auto& row : table_) {
    if (row.size() != dim_)
      throw std::invalid_argument("FiniteAlgebra: table shape mismatch");
    for (auto& entry : row) {
      if (entry.size() != dim_)
        throw std::invalid_argument("FiniteAlgebra: table entry length mismatch");
      for (auto& c : entry) c %= p_.p;
    }
  }
  for (auto& c : one_) c %= p_.p;
  check_table();
}

void FiniteAlgebra::check_table() const {
  auto coords_mul = [&](const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        u32 f = gf_mul(a[i], b[j], p_.p);
        if (f == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          out[k] = gf_add(out[k], gf_mul(f, table_[i][j][k], p_.p), p_.p);
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (table_[i][j] != table_[j][i])
        throw std::invalid_argument("FiniteAlgebra: table not commutative at pair (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  std::vector<u32> ei(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::fill(ei.begin(), ei.end(), 0);
    ei[i] = 1;
    if (coords_mul(one_, ei) != ei)
      throw std::invalid_argument("FiniteAlgebra: identity law fails on basis element " +
                                  std::to_string(i));
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::vector<u32> ek(dim_, 0);
        ek[k] = 1;
        auto lhs = coords_mul(table_[i][j], ek);
        std::vector<u32> e_i(dim_, 0);
        e_i[i] = 1;
        auto rhs = coords_mul(e_i, table_[j][k]);
        if (lhs != rhs)
          throw std::invalid_argument("FiniteAlgebra: table not associative at triple (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
}

std::uint64_t FiniteAlgebra::element_count() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim_; ++i) n *= p_.p;
  return n;
}

Element FiniteAlgebra::zero() const { return Element{std::vector<u32>(dim_, 0)}; }
Element FiniteAlgebra::one() const { return Element{one_}; }

Element FiniteAlgebra::basis_element(std::size_t i) const {
  Element e = zero();
  e.coords[i] = 1;
  return e;
}

Element FiniteAlgebra::element_from_index(std::uint64_t idx) const {
  return Element{index_to_vector(idx, dim_, p_.p)};
}

std::uint64_t FiniteAlgebra::element_index(const Element& a) const {
  return vector_to_index(a.coords, p_.p);
}

std::string FiniteAlgebra::format_element(const Element& a) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.coords[i] == 0) continue;
    if (!first) out << "+";
    if (a.coords[i] != 1 || labels_[i] == "1") out << a.coords[i];
    if (labels_[i] != "1") {
      if (a.coords[i] != 1) out << "*";
      out << labels_[i];
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Element FiniteAlgebra::add(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i)
    out.coords[i] = gf_add(a.coords[i], b.coords[i], p_.p);
  return out;
}

Element FiniteAlgebra::sub(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i)
    out.coords[i] = gf_sub(a.coords[i], b.coords[i], p_.p);
  return out;
}

Element FiniteAlgebra::scale(u32 c, const Element& a) const {
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) out.coords[i] = gf_mul(c % p_.p, a.coords[i], p_.p);
  return out;
}

Element FiniteAlgebra::mul(const Element& a, const Element& b) const {
  if (a.coords.size() != dim_ || b.coords.size() != dim_)
    throw std::invalid_argument("mul: element belongs to a different algebra");
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      u32 f = gf_mul(a.coords[i], b.coords[j], p_.p);
      if (f == 0) continue;
      const auto& t = table_[i][j];
      for (std::size_t k = 0; k < dim_; ++k)
        out.coords[k] = gf_add(out.coords[k], gf_mul(f, t[k], p_.p), p_.p);
    }
  }
  return out;
}

Element FiniteAlgebra::pow(const Element& a, std::uint64_t e) const {
  Element r = one();
  Element b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Matrix FiniteAlgebra::mult_matrix(const Element& a) const {
  Matrix m(p_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Element col = mul(a, basis_element(j));
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col.coords[i]);
  }
  return m;
}

bool FiniteAlgebra::is_zero(const Element& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](u32 c) { return c == 0; });
}

bool FiniteAlgebra::is_unit(const Element& a) const {
  return is_invertible(mult_matrix(a));
}

IdealSub FiniteAlgebra::annihilator(const Element& a) const {
  return IdealSub{kernel(mult_matrix(a))};
}

IdealSub FiniteAlgebra::zero_ideal() const { return IdealSub{Subspace(p_, dim_)}; }

IdealSub FiniteAlgebra::unit_ideal() const { return IdealSub{Subspace::full(p_, dim_)}; }

bool FiniteAlgebra::is_ideal(const Subspace& s) const {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    Element v{s.basis_vector(r)};
    for (std::size_t i = 0; i < dim_; ++i)
      if (!s.contains(mul(basis_element(i), v).coords)) return false;
  }
  return true;
}

IdealSub FiniteAlgebra::ideal_generated(const std::vector<Element>& gens) const {
  std::vector<std::vector<u32>> vecs;
  for (const auto& g : gens) vecs.push_back(g.coords);
  Subspace span = Subspace::span(p_, dim_, vecs);
  // Saturate under multiplication by basis elements.
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t before = span.dim();
    std::vector<std::vector<u32>> extra;
    for (std::size_t r = 0; r < span.dim(); ++r) {
      Element v{span.basis_vector(r)};
      for (std::size_t i = 0; i < dim_; ++i) {
        Element w = mul(basis_element(i), v);
        if (!span.contains(w.coords)) extra.push_back(w.coords);
      }
    }
    if (!extra.empty()) {
      span = sum(span, Subspace::span(p_, dim_, extra));
      grew = span.dim() > before;
    }
  }
  return IdealSub{span};
}

IdealSub FiniteAlgebra::ideal_product(const IdealSub& lhs, const IdealSub& rhs) const {
  std::vector<Element> gens;
  for (std::size_t r = 0; r < lhs.space.dim(); ++r)
    for (std::size_t s = 0; s < rhs.space.dim(); ++s)
      gens.push_back(mul(Element{lhs.space.basis_vector(r)},
                         Element{rhs.space.basis_vector(s)}));
  return ideal_generated(gens);
}

IdealSub FiniteAlgebra::ideal_power(const IdealSub& ideal, std::size_t n) const {
  if (n == 0) return unit_ideal();
  IdealSub acc = ideal;
  for (std::size_t i = 1; i < n; ++i) acc = ideal_product(acc, ideal);
  return acc;
}

FiniteAlgebra::Locality FiniteAlgebra::compute_locality() const {
  const std::uint64_t count = element_count();
  if (count > max_enumeration_bound())
    throw std::runtime_error("locality: |R| exceeds the enumeration bound (set ZDGLAB_MAX_ELEMS to raise)");
  // A finite commutative ring is local iff its only idempotents are 0 and 1.
  bool local = true;
  for (std::uint64_t idx = 0; idx < count && local; ++idx) {
    Element e = element_from_index(idx);
    if (is_zero(e)) continue;
    if (e.coords == one_) continue;
    if (mul(e, e).coords == e.coords) local = false;
  }
  if (!local) return Locality{false, zero_ideal(), 0};

  // Residue field F_p: each basis element has a unique translate e_i - c*1
  // that is a non-unit; those translates span m.
  std::vector<std::vector<u32>> gens;
  bool prime_residue = true;
  for (std::size_t i = 0; i < dim_ && prime_residue; ++i) {
    bool found = false;
    for (u32 c = 0; c < p_.p && !found; ++c) {
      Element cand = sub(basis_element(i), scale(c, one()));
      if (!is_unit(cand)) {
        gens.push_back(cand.coords);
        found = true;
      }
    }
    if (!found) prime_residue = false;
  }
  Subspace m(p_, dim_);
  if (prime_residue) {
    m = Subspace::span(p_, dim_, gens);
  } else {
    // Larger residue field: in a local Artinian ring the non-units are
    // exactly m, so collect them by element scan.
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      Element e = element_from_index(idx);
      if (!is_unit(e) && !m.contains(e.coords))
        m = sum(m, Subspace::span(p_, dim_, {e.coords}));
    }
  }
  return Locality{true, IdealSub{m}, dim_ - m.dim()};
}

const FiniteAlgebra::Locality& FiniteAlgebra::locality() const {
  if (!locality_) locality_ = compute_locality();
  return *locality_;
}

IdealSub FiniteAlgebra::socle() const {
  const Locality& loc = locality();
  if (!loc.is_local) throw std::domain_error("socle: ring is not local");
  const Subspace& m = loc.max_ideal.space;
  if (m.dim() == 0) return zero_ideal();  // field: socle taken to be 0
  Subspace soc = Subspace::full(p_, dim_);
  for (std::size_t r = 0; r < m.dim(); ++r)
    soc = intersect(soc, kernel(mult_matrix(Element{m.basis_vector(r)})));
  return IdealSub{soc};
}

RingInvariants FiniteAlgebra::compute_invariants() const {
  RingInvariants inv;
  const Locality& loc = locality();
  inv.is_local = loc.is_local;
  if (!loc.is_local) {
    inv.length = dim_;  // composition length over F_p only
    return inv;
  }
  const std::size_t rd = loc.residue_degree;
  inv.residue_degree = rd;

  std::vector<std::size_t> power_dims;  // dim_{F_p} of m^0, m^1, ...
  power_dims.push_back(dim_);
  IdealSub cur = loc.max_ideal;
  while (cur.space.dim() > 0) {
    power_dims.push_back(cur.space.dim());
    cur = ideal_product(cur, loc.max_ideal);
  }
  power_dims.push_back(0);
  inv.nilpotency_index = power_dims.size() - 1;
  for (std::size_t i = 0; i + 1 < power_dims.size(); ++i) {
    std::size_t diff = power_dims[i] - power_dims[i + 1];
    if (diff % rd != 0)
      throw std::logic_error("invariants: Hilbert step not divisible by residue degree");
    inv.hilbert.push_back(diff / rd);
  }
  inv.length = std::accumulate(inv.hilbert.begin(), inv.hilbert.end(), std::size_t{0});
  inv.embdim = inv.hilbert.size() > 1 ? inv.hilbert[1] : 0;
  std::size_t soc_fp = socle().space.dim();
  if (soc_fp % rd != 0)
    throw std::logic_error("invariants: socle dimension not divisible by residue degree");
  inv.socle_dim = soc_fp / rd;
  inv.is_gorenstein = inv.socle_dim == 1;
  return inv;
}

const RingInvariants& FiniteAlgebra::invariants() const {
  if (!invariants_) invariants_ = compute_invariants();
  return *invariants_;
}

Length5Case classify_length5(const RingInvariants& inv) {
  if (!inv.is_local || inv.length != 5)
    throw std::invalid_argument("classify_length5: requires a local ring of length 5");
  const auto& h = inv.hilbert;
  if (h == std::vector<std::size_t>{1, 1, 1, 1, 1}) return Length5Case::PIR_CHAIN;
  if (h == std::vector<std::size_t>{1, 3, 1}) return Length5Case::H131;
  if (h == std::vector<std::size_t>{1, 2, 2}) return Length5Case::H122;
  if (h == std::vector<std::size_t>{1, 2, 1, 1}) return Length5Case::H1211;
  throw std::logic_error("classify_length5: structurally impossible Hilbert function "
                         "(engine bug)");
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.prime() == b.prime()))
    throw std::invalid_argument("product: prime mismatch");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l + "|1");
  for (const auto& l : b.basis_labels()) labels.push_back(l + "|2");
  std::vector<std::vector<std::vector<u32>>> table(
      d, std::vector<std::vector<u32>>(d, std::vector<u32>(d, 0)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) table[i][j][k] = a.table()[i][j][k];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        table[da + i][da + j][da + k] = b.table()[i][j][k];
  std::vector<u32> one(d, 0);
  for (std::size_t i = 0; i < da; ++i) one[i] = a.one().coords[i];
  for (std::size_t i = 0; i < db; ++i) one[da + i] = b.one().coords[i];
  return FiniteAlgebra(a.prime(), std::move(labels), std::move(table), std::move(one));
}

namespace {

// Subalgebra Re for an idempotent e, with identity e, expressed in a basis
// of the subspace e*R.
FiniteAlgebra corner_algebra(const FiniteAlgebra& r, const Element& e) {
  const std::size_t d = r.dim();
  std::vector<std::vector<u32>> gens;
  for (std::size_t i = 0; i < d; ++i)
    gens.push_back(r.mul(e, r.basis_element(i)).coords);
  Subspace sp = Subspace::span(r.prime(), d, gens);
  const std::size_t n = sp.dim();
  // RREF basis: coordinates of a member vector are its entries at pivot cols.
  std::vector<std::size_t> pivots(n);
  for (std::size_t row = 0; row < n; ++row) {
    std::size_t c = 0;
    while (sp.basis().at(row, c) == 0) ++c;
    pivots[row] = c;
  }
  auto coords_of = [&](const std::vector<u32>& v) {
    std::vector<u32> out(n);
    for (std::size_t row = 0; row < n; ++row) out[row] = v[pivots[row]];
    return out;
  };
  std::vector<std::vector<std::vector<u32>>> table(
      n, std::vector<std::vector<u32>>(n, std::vector<u32>(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element prod = r.mul(Element{sp.basis_vector(i)}, Element{sp.basis_vector(j)});
      if (!sp.contains(prod.coords))
        throw std::logic_error("corner_algebra: product left the corner subspace");
      table[i][j] = coords_of(prod.coords);
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(r.format_element(Element{sp.basis_vector(i)}));
  return FiniteAlgebra(r.prime(), std::move(labels), std::move(table),
                       coords_of(e.coords));
}

}  // namespace

std::vector<FiniteAlgebra> local_decomposition(const FiniteAlgebra& r) {
  if (r.locality().is_local) return {r};
  const std::uint64_t count = r.element_count();
  Element split = r.zero();
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Element e = r.element_from_index(idx);
    if (e.coords == r.one().coords) continue;
    if (r.mul(e, e).coords == e.coords) {
      split = e;
      break;
    }
  }
  if (r.is_zero(split)) throw std::logic_error("local_decomposition: no idempotent found");
  Element comp = r.sub(r.one(), split);
  auto left = local_decomposition(corner_algebra(r, split));
  auto right = local_decomposition(corner_algebra(r, comp));
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

FiniteAlgebra trivial_extension(const FiniteAlgebra& a) {
  const auto& loc = a.locality();
  if (!loc.is_local) throw std::domain_error("trivial_extension: base ring is not local");
  if (loc.residue_degree != 1)
    throw std::domain_error("trivial_extension: base ring must have residue degree 1");
  const std::size_t n = a.dim(), d = 2 * n;
  // Basis: e_0..e_{n-1} from A, then f_0..f_{n-1} the dual basis of Hom(A, F_p).
  // (a,0)(a',0) = (aa',0);  (e_i,0)(0,f_j) = (0, e_i . f_j) with
  // (e_i . f_j)(e_k) = f_j(e_i e_k) = table[i][k][j];  (0,f)(0,f') = 0.
  std::vector<std::vector<std::vector<u32>>> table(
      d, std::vector<std::vector<u32>>(d, std::vector<u32>(d, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table[i][j][k] = a.table()[i][j][k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        u32 c = a.table()[i][k][j];
        table[i][n + j][n + k] = c;
        table[n + j][i][n + k] = c;
      }
  std::vector<std::string> labels;
  for (const auto& l : a.basis_labels()) labels.push_back(l);
  for (const auto& l : a.basis_labels()) labels.push_back("f[" + l + "]");
  std::vector<u32> one(d, 0);
  for (std::size_t i = 0; i < n; ++i) one[i] = a.one().coords[i];
  return FiniteAlgebra(a.prime(), std::move(labels), std::move(table), std::move(one));
}

}  // namespace zdg
