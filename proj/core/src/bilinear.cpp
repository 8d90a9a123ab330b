#include "zdg/bilinear.hpp"

#include <algorithm>

namespace zdg {

std::string to_string(PhiError e) {
  switch (e) {
    case PhiError::NOT_LOCAL: return "NOT_LOCAL";
    case PhiError::RESIDUE_DEG: return "RESIDUE_DEG";
    case PhiError::M2_NOT_PRINCIPAL: return "M2_NOT_PRINCIPAL";
    case PhiError::M3_NONZERO: return "M3_NONZERO";
  }
  return "?";
}

BilinearSpace::BilinearSpace(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("BilinearSpace: Gram matrix must be square");
  if (!gram_.is_symmetric())
    throw std::invalid_argument("BilinearSpace: Gram matrix must be symmetric");
}

u32 BilinearSpace::eval(const std::vector<u32>& u, const std::vector<u32>& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw std::invalid_argument("BilinearSpace::eval: vector length mismatch");
  const u32 p = prime().p;
  u32 acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] % p == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      acc = gf_add(acc, gf_mul(gf_mul(u[i] % p, gram_.at(i, j), p), v[j] % p, p), p);
  }
  return acc;
}

Subspace BilinearSpace::radical() const { return kernel(gram_); }

bool BilinearSpace::is_nondegenerate() const { return radical().dim() == 0; }

std::vector<std::vector<u32>> orthogonal_basis(const BilinearSpace& v) {
  const u32 p = v.prime().p;
  if (p == 2) throw UnsupportedCharacteristic();
  std::vector<std::vector<u32>> result;
  // Current working basis of the not-yet-processed orthogonal complement.
  std::vector<std::vector<u32>> work;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    std::vector<u32> e(v.dim(), 0);
    e[i] = 1;
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    // Look for a non-isotropic vector in the span of `work`.
    std::optional<std::vector<u32>> pick;
    for (const auto& b : work)
      if (v.eval(b, b) != 0) {
        pick = b;
        break;
      }
    if (!pick) {
      for (std::size_t i = 0; i < work.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < work.size() && !pick; ++j)
          if (v.eval(work[i], work[j]) != 0) {
            // char != 2: (u+w, u+w) = 2 (u,w) != 0
            std::vector<u32> s(v.dim());
            for (std::size_t c = 0; c < v.dim(); ++c)
              s[c] = gf_add(work[i][c], work[j][c], p);
            pick = s;
          }
    }
    if (!pick) {
      // Form vanishes identically on the remaining space.
      for (auto& b : work) result.push_back(b);
      break;
    }
    result.push_back(*pick);
    u32 q = v.eval(*pick, *pick);
    std::vector<std::vector<u32>> projected;
    for (const auto& b : work) {
      u32 f = gf_mul(v.eval(b, *pick), gf_inv(q, p), p);
      std::vector<u32> c(v.dim());
      for (std::size_t k = 0; k < v.dim(); ++k)
        c[k] = gf_sub(b[k], gf_mul(f, (*pick)[k], p), p);
      projected.push_back(std::move(c));
    }
    Subspace sp = Subspace::span(v.prime(), v.dim(), projected);
    work.clear();
    for (std::size_t r = 0; r < sp.dim(); ++r) work.push_back(sp.basis_vector(r));
  }
  return result;
}

RadicalSplit split_radical(const BilinearSpace& v) {
  Subspace rad = v.radical();
  Subspace span = rad;
  std::vector<std::vector<u32>> complement;
  for (std::size_t i = 0; i < v.dim() && span.dim() < v.dim(); ++i) {
    std::vector<u32> e(v.dim(), 0);
    e[i] = 1;
    if (!span.contains(e)) {
      complement.push_back(e);
      span = sum(span, Subspace::span(v.prime(), v.dim(), {e}));
    }
  }
  Matrix gram(v.prime(), complement.size(), complement.size());
  for (std::size_t i = 0; i < complement.size(); ++i)
    for (std::size_t j = 0; j < complement.size(); ++j)
      gram.set(i, j, v.eval(complement[i], complement[j]));
  return RadicalSplit{std::move(rad), std::move(complement), BilinearSpace(std::move(gram))};
}

std::vector<std::vector<u32>> isotropic_family(const BilinearSpace& space,
                                               const std::vector<u32>& v, std::size_t m) {
  const u32 p = space.prime().p;
  if (std::all_of(v.begin(), v.end(), [p](u32 c) { return c % p == 0; }))
    throw std::invalid_argument("isotropic_family: vector must be nonzero");
  if (space.eval(v, v) != 0)
    throw std::invalid_argument("isotropic_family: vector is not isotropic");
  if (m > p - 1)
    throw std::invalid_argument("isotropic_family: at most p-1 distinct nonzero scalars");
  std::vector<std::vector<u32>> out;
  for (u32 a = 1; a <= m; ++a) {
    std::vector<u32> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = gf_mul(a, v[i] % p, p);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<std::vector<u32>> candidate_vectors(Prime p, std::size_t dim,
                                                bool projective_only) {
  std::vector<std::vector<u32>> out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= p.p;
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<u32> v = index_to_vector(idx, dim, p.p);
    if (projective_only) {
      std::size_t piv = 0;
      while (v[piv] == 0) ++piv;
      if (v[piv] != 1) continue;  // pivot-1 normalized representatives only
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool parallel(const std::vector<u32>& a, const std::vector<u32>& b, u32 p) {
  std::size_t piv = 0;
  while (piv < a.size() && a[piv] == 0) ++piv;
  if (piv == a.size()) return true;
  if (b[piv] == 0) return false;
  u32 alpha = gf_mul(b[piv], gf_inv(a[piv], p), p);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (gf_mul(alpha, a[i], p) != b[i]) return false;
  return true;
}

struct OrthoSearch {
  const BilinearSpace& space;
  const std::vector<std::vector<u32>>& cands;
  std::size_t size;
  bool nonparallel;
  std::uint64_t budget;
  std::size_t max_witnesses;
  OrthogonalSearchResult result;
  std::vector<std::size_t> chosen;

  bool exhausted() {
    if (result.candidates_checked >= budget) {
      result.budget_exceeded = true;
      return true;
    }
    return result.witnesses.size() >= max_witnesses;
  }

  void extend(std::size_t start) {
    if (exhausted()) return;
    if (chosen.size() == size) {
      std::vector<std::vector<u32>> witness;
      for (std::size_t idx : chosen) witness.push_back(cands[idx]);
      result.witnesses.push_back(std::move(witness));
      return;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
      ++result.candidates_checked;
      if (exhausted()) return;
      bool ok = true;
      for (std::size_t idx : chosen) {
        if (space.eval(cands[idx], cands[i]) != 0) {
          ok = false;
          break;
        }
        if (nonparallel && parallel(cands[idx], cands[i], space.prime().p)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      extend(i + 1);
      chosen.pop_back();
      if (result.budget_exceeded) return;
    }
  }
};

}  // namespace

OrthogonalSearchResult search_orthogonal_sets(const BilinearSpace& space, std::size_t size,
                                              bool pairwise_nonparallel, std::uint64_t budget,
                                              std::size_t max_witnesses) {
  auto cands = candidate_vectors(space.prime(), space.dim(), pairwise_nonparallel);
  OrthoSearch search{space, cands, size, pairwise_nonparallel, budget, max_witnesses, {}, {}};
  if (size > 0) search.extend(0);
  return std::move(search.result);
}

PhiConstruction::PhiConstruction(const FiniteAlgebra& ring, BilinearSpace space, Element l,
                                 std::vector<Element> coset_basis, Subspace m, Subspace m2,
                                 Matrix projector)
    : ring_(&ring),
      space_(std::move(space)),
      l_(std::move(l)),
      coset_basis_(std::move(coset_basis)),
      m_(std::move(m)),
      m2_(std::move(m2)),
      projector_(std::move(projector)) {}

std::vector<u32> PhiConstruction::project(const Element& a) const {
  if (!m_.contains(a.coords))
    throw std::invalid_argument("PhiConstruction::project: element is not in m");
  return projector_.apply(a.coords);
}

PhiConstruction PhiConstruction::build(const FiniteAlgebra& ring) {
  const auto& loc = ring.locality();
  if (!loc.is_local) throw PhiConstructionError(PhiError::NOT_LOCAL, "ring is not local");
  if (loc.residue_degree != 1)
    throw PhiConstructionError(PhiError::RESIDUE_DEG,
                               "residue field is a proper extension of F_p");
  const Subspace& m = loc.max_ideal.space;
  Subspace m2 = ring.ideal_power(loc.max_ideal, 2).space;
  // Check m^3 before the shape of m^2: with m^3 = 0, "m^2 principal"
  // coincides with dim m^2 = 1, so the m^3 diagnosis is the sharper one.
  Subspace m3 = ring.ideal_product(IdealSub{m2}, loc.max_ideal).space;
  if (m3.dim() != 0)
    throw PhiConstructionError(PhiError::M3_NONZERO, "m^3 is nonzero");
  if (m2.dim() == 0)
    throw PhiConstructionError(PhiError::M2_NOT_PRINCIPAL, "m^2 is zero");
  if (m2.dim() != 1)
    throw PhiConstructionError(PhiError::M2_NOT_PRINCIPAL,
                               "dim m^2 = " + std::to_string(m2.dim()));

  const Prime p = ring.prime();
  Element l{m2.basis_vector(0)};

  // Coset representatives: extend the RREF basis of m^2 by basis vectors of m.
  std::vector<Element> coset;
  Subspace span = m2;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    std::vector<u32> v = m.basis_vector(r);
    if (!span.contains(v)) {
      coset.push_back(Element{v});
      span = sum(span, Subspace::span(p, ring.dim(), {v}));
    }
  }
  const std::size_t e = coset.size();

  // Projection m -> m/m^2 coordinates: invert the change-of-basis matrix
  // whose columns are the coset lifts, the m^2 basis, and a completion.
  Matrix cols(p, ring.dim(), ring.dim());
  std::size_t col = 0;
  for (const auto& b : coset) {
    for (std::size_t r = 0; r < ring.dim(); ++r) cols.set(r, col, b.coords[r]);
    ++col;
  }
  for (std::size_t r = 0; r < ring.dim(); ++r) cols.set(r, col, l.coords[r]);
  ++col;
  Subspace fill = span;
  for (std::size_t i = 0; i < ring.dim() && col < ring.dim(); ++i) {
    std::vector<u32> unit(ring.dim(), 0);
    unit[i] = 1;
    if (!fill.contains(unit)) {
      for (std::size_t r = 0; r < ring.dim(); ++r) cols.set(r, col, unit[r]);
      ++col;
      fill = sum(fill, Subspace::span(p, ring.dim(), {unit}));
    }
  }
  Matrix inv = inverse(cols);
  Matrix projector(p, e, ring.dim());
  for (std::size_t r = 0; r < e; ++r)
    for (std::size_t c = 0; c < ring.dim(); ++c) projector.set(r, c, inv.at(r, c));

  // Gram entry: b_i b_j lies in m^2 = <l>; the unique u with b_i b_j = u l.
  std::size_t lpiv = 0;
  while (l.coords[lpiv] == 0) ++lpiv;  // RREF basis vector: pivot entry is 1
  Matrix gram(p, e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i; j < e; ++j) {
      Element prod = ring.mul(coset[i], coset[j]);
      if (!m2.contains(prod.coords))
        throw std::logic_error("build_phi: product of m-elements left m^2");
      u32 u = prod.coords[lpiv];
      gram.set(i, j, u);
      gram.set(j, i, u);
    }

  PhiConstruction phi(ring, BilinearSpace(std::move(gram)), std::move(l), std::move(coset),
                      m, std::move(m2), std::move(projector));
  // Construction invariant: orthogonality in V matches vanishing products in R.
  CheckReport rep = phi.socle_radical_check();
  if (!rep.orthogonality_pass)
    throw std::logic_error("build_phi: orthogonality invariant failed: " +
                           rep.counterexample);
  return phi;
}

PhiConstruction::CheckReport PhiConstruction::socle_radical_check() const {
  CheckReport rep;
  const FiniteAlgebra& ring = *ring_;
  Subspace rad = space_.radical();
  Subspace soc = ring.socle().space;
  const RingInvariants& inv = ring.invariants();

  auto m_elements = m_.enumerate();
  auto check_pair = [&](const std::vector<u32>& av, const std::vector<u32>& bv) {
    Element a{av}, b{bv};
    bool prod_zero = ring.is_zero(ring.mul(a, b));
    bool phi_zero = space_.eval(project(a), project(b)) == 0;
    if (prod_zero != phi_zero) {
      rep.orthogonality_pass = false;
      if (rep.counterexample.empty())
        rep.counterexample =
            "a = " + ring.format_element(a) + ", b = " + ring.format_element(b);
    }
  };
  for (const auto& av : m_elements) {
    Element a{av};
    bool in_soc = soc.contains(av);
    bool in_rad = rad.contains(project(a));
    if (in_soc != in_rad && rep.socle_dim_pass) {
      rep.socle_dim_pass = false;
      rep.counterexample = "a = " + ring.format_element(a) +
                           " (socle membership and radical membership disagree)";
    }
  }
  const std::size_t n = m_elements.size();
  if (n * n <= 600'000) {
    for (const auto& av : m_elements)
      for (const auto& bv : m_elements) check_pair(av, bv);
  } else {
    // Large ring: deterministic sampled pair check.
    std::uint64_t state = 0x2545F4914F6CDD1Dull;
    for (std::size_t k = 0; k < 50'000; ++k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      std::size_t i = static_cast<std::size_t>((state >> 33) % n);
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      std::size_t j = static_cast<std::size_t>((state >> 33) % n);
      check_pair(m_elements[i], m_elements[j]);
    }
  }
  if (inv.socle_dim != rad.dim() + 1) rep.socle_dim_pass = false;
  if (inv.is_gorenstein != space_.is_nondegenerate()) rep.gorenstein_pass = false;
  return rep;
}

std::vector<Matrix> all_nondegenerate_symmetric_grams(Prime p, std::size_t dim) {
  const std::size_t free_entries = dim * (dim + 1) / 2;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free_entries; ++i) count *= p.p;
  std::vector<Matrix> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<u32> vals = index_to_vector(idx, free_entries, p.p);
    Matrix g(p, dim, dim);
    std::size_t k = 0;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = r; c < dim; ++c) {
        g.set(r, c, vals[k]);
        g.set(c, r, vals[k]);
        ++k;
      }
    if (is_invertible(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Matrix> congruence_representative_grams(Prime p, std::size_t dim) {
  if (p.p == 2)
    throw std::invalid_argument(
        "congruence_representative_grams: only defined for odd characteristic");
  u32 nonsquare = 0;
  for (u32 a = 2; a < p.p; ++a)
    if (!gf_is_square(a, p.p)) {
      nonsquare = a;
      break;
    }
  Matrix id = Matrix::identity(p, dim);
  Matrix other = Matrix::identity(p, dim);
  other.set(dim - 1, dim - 1, nonsquare);
  return {id, other};
}

}  // namespace zdg
