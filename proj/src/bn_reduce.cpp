#include "wdvv/bn_reduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdvv {

namespace {

size_t position_of(const std::vector<Coord>& coords, const std::string& name) {
  for (size_t p = 0; p < coords.size(); ++p)
    if (coords[p].name == name) return p;
  throw std::logic_error("no coordinate named " + name);
}

// tangent or transversal field as a short combination of chart fields
using Combo = std::vector<std::pair<size_t, Rat>>;

struct DoubledData {
  WaterBag w;
  CTensor c;    // flat chart of the ambient doubled bag
  Metric eta;   // same chart
  std::vector<Coord> coords;
};

DoubledData build_doubled(unsigned N, unsigned M) {
  WaterBag w = WaterBag::make({N, M, Flavor::BN});
  FlatChart fc = flat_map(w);
  CTensor c = push_to_flat(c_closed(w), w, fc);
  Metric eta = metric_closed_flat(w);
  std::vector<Coord> coords = c.coords;
  return {std::move(w), std::move(c), std::move(eta), std::move(coords)};
}

// locus substitutions: even-index t to zero, b_{j+M} to -b_j, k_{j+M} to k_j
PoleExpr restrict_locus(PoleExpr e, unsigned bigN, unsigned M) {
  for (unsigned r = 2; r <= bigN; r += 2)
    e = e.substitute(WaterBag::t_name(r), MultiPoly());
  for (unsigned j = 1; j <= M; ++j) {
    e = e.substitute(WaterBag::b_name(j + M), -MultiPoly::var(WaterBag::b_name(j)));
    e = e.substitute(WaterBag::k_name(j + M), MultiPoly::var(WaterBag::k_name(j)));
  }
  return e;
}

std::map<std::string, Rat> bn_sample_point(const std::vector<Coord>& coords,
                                           unsigned M, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  auto draw = [&] {
    int v = 0;
    while (v == 0) v = num(rng);
    return Rat(v) / Rat(den(rng));
  };
  std::map<std::string, Rat> pt;
  std::vector<std::string> bnames;
  for (const Coord& c : coords) {
    pt[c.name] = draw();
    if (c.kind == CoordKind::B) bnames.push_back(c.name);
  }
  // log positions must stay off every pole locus of the restricted tensor:
  // pairwise distinct and pairwise non-opposite
  for (size_t i = 1; i < bnames.size(); ++i)
    for (size_t j = 0; j < i;) {
      Rat vi = pt[bnames[i]], vj = pt[bnames[j]];
      if (vi == vj || vi == -vj) {
        pt[bnames[i]] = draw();
        j = 0;
      } else {
        ++j;
      }
    }
  for (unsigned r = 1; r <= M; ++r) pt[WaterBag::k_name(r)] = draw();
  return pt;
}

using QMat = std::vector<std::vector<Rat>>;

QMat mat_mul(const QMat& A, const QMat& B) {
  size_t n = A.size();
  QMat C(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

// exact inverse by Gauss-Jordan elimination; throws on a singular matrix
QMat mat_inverse(QMat A) {
  size_t n = A.size();
  QMat I(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) I[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(I[piv], I[col]);
    Rat d = A[col][col];
    for (size_t j = 0; j < n; ++j) {
      A[col][j] /= d;
      I[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rat f = A[r][col];
      for (size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[col][j];
        I[r][j] -= f * I[col][j];
      }
    }
  }
  return I;
}

}  // namespace

BnRestricted bn_restrict(unsigned N, unsigned M) {
  DoubledData D = build_doubled(N, M);
  unsigned bigN = D.w.N();

  std::vector<Combo> fields;
  std::vector<Coord> coords;
  for (unsigned r = 1; r <= bigN; r += 2) {
    fields.push_back({{position_of(D.coords, WaterBag::t_name(r)), Rat(1)}});
    coords.push_back(Coord{CoordKind::T, r, 0, WaterBag::t_name(r)});
  }
  for (unsigned j = 1; j <= M; ++j) {
    fields.push_back({{position_of(D.coords, WaterBag::b_name(j)), Rat(1)},
                      {position_of(D.coords, WaterBag::b_name(j + M)), Rat(-1)}});
    coords.push_back(Coord{CoordKind::B, j, 0, WaterBag::b_name(j)});
  }

  size_t n = fields.size();
  BnRestricted R;
  R.coords = coords;
  R.eta.assign(n, std::vector<PoleExpr>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      PoleExpr v;
      for (const auto& [a, ca] : fields[i])
        for (const auto& [b, cb] : fields[j])
          v = v + D.eta.at(a, b) * (ca * cb);
      v = restrict_locus(v, bigN, M);
      R.eta[i][j] = v;
      if (j != i) R.eta[j][i] = std::move(v);
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      for (size_t l = j; l < n; ++l) {
        PoleExpr v;
        for (const auto& [a, ca] : fields[i])
          for (const auto& [b, cb] : fields[j])
            for (const auto& [g, cg] : fields[l])
              v = v + D.c.at(a, b, g) * (ca * cb * cg);
        v = restrict_locus(v, bigN, M);
        if (!v.is_zero()) R.c[{i, j, l}] = std::move(v);
      }
  return R;
}

CheckReport bn_restriction_check(unsigned N, unsigned M, unsigned n_points,
                                 uint64_t seed) {
  CheckReport rep{"even-sector restriction", true, {}};
  DoubledData D = build_doubled(N, M);
  unsigned bigN = D.w.N();
  RaisedC raised = raise_first_index(D.c, D.w);

  // tilde-chart slot data over the doubled coordinates
  auto bpos = [&](unsigned j) {
    return position_of(D.coords, WaterBag::b_name(j));
  };
  auto tpos = [&](unsigned r) {
    return position_of(D.coords, WaterBag::t_name(r));
  };
  auto lower_bt = [&](unsigned i) {
    return Combo{{bpos(i), Rat(1)}, {bpos(i + M), Rat(-1)}};
  };
  auto lower_t = [&](unsigned r) { return Combo{{tpos(r), Rat(1)}}; };

  // raised component with tilde lower slots, on the locus
  auto comp = [&](const std::vector<size_t>& upper, const Combo& ca,
                  const Combo& cb) {
    PoleExpr v;
    for (size_t g : upper)
      for (const auto& [a, fa] : ca)
        for (const auto& [b, fb] : cb)
          v = v + raised.comp[g][a][b] * (fa * fb);
    return restrict_locus(v, bigN, M);
  };
  auto upper_dt = [&](unsigned k) {
    return std::vector<size_t>{bpos(k), bpos(k + M)};
  };
  auto upper_t = [&](unsigned u) { return std::vector<size_t>{tpos(u)}; };

  unsigned families_checked = 0;
  auto expect_zero = [&](const PoleExpr& v, const std::string& label) {
    ++families_checked;
    if (!v.is_zero()) {
      rep.pass = false;
      rep.witnesses.push_back("component " + label + " does not restrict to zero");
    }
  };

  for (unsigned i = 1; i <= M; ++i)
    for (unsigned j = i; j <= M; ++j) {
      for (unsigned k = 1; k <= M; ++k)
        expect_zero(comp(upper_dt(k), lower_bt(i), lower_bt(j)),
                    "c_{bt" + std::to_string(i) + " bt" + std::to_string(j) +
                        "}^{dt" + std::to_string(k) + "}");
      for (unsigned r = 2; r <= bigN; r += 2)
        expect_zero(comp(upper_t(r), lower_bt(i), lower_bt(j)),
                    "c_{bt" + std::to_string(i) + " bt" + std::to_string(j) +
                        "}^{t" + std::to_string(r) + "}");
    }
  for (unsigned i = 1; i <= M; ++i)
    for (unsigned r = 1; r <= bigN; r += 2) {
      for (unsigned k = 1; k <= M; ++k)
        expect_zero(comp(upper_dt(k), lower_bt(i), lower_t(r)),
                    "c_{bt" + std::to_string(i) + " t" + std::to_string(r) +
                        "}^{dt" + std::to_string(k) + "}");
      for (unsigned s = 2; s <= bigN; s += 2)
        expect_zero(comp(upper_t(s), lower_bt(i), lower_t(r)),
                    "c_{bt" + std::to_string(i) + " t" + std::to_string(r) +
                        "}^{t" + std::to_string(s) + "}");
    }
  for (unsigned r = 1; r <= bigN; r += 2)
    for (unsigned s = r; s <= bigN; s += 2) {
      for (unsigned k = 1; k <= M; ++k)
        expect_zero(comp(upper_dt(k), lower_t(r), lower_t(s)),
                    "c_{t" + std::to_string(r) + " t" + std::to_string(s) +
                        "}^{dt" + std::to_string(k) + "}");
      for (unsigned u = 2; u <= bigN; u += 2)
        expect_zero(comp(upper_t(u), lower_t(r), lower_t(s)),
                    "c_{t" + std::to_string(r) + " t" + std::to_string(s) +
                        "}^{t" + std::to_string(u) + "}");
    }
  if (rep.pass)
    rep.witnesses.push_back(
        "all " + std::to_string(families_checked) +
        " mixed tangent-normal components restrict to zero");

  // restricted metric closed form
  BnRestricted R = bn_restrict(N, M);
  size_t n = R.coords.size();
  bool metric_ok = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PoleExpr want;
      const Coord &ci = R.coords[i], &cj = R.coords[j];
      if (ci.kind == CoordKind::T && cj.kind == CoordKind::T &&
          ci.i + cj.i == bigN + 1)
        want = PoleExpr(MultiPoly(Rat(-1) / Rat(bigN + 1)));
      if (ci.kind == CoordKind::B && cj.kind == CoordKind::B && ci.i == cj.i)
        want = PoleExpr(MultiPoly::var(WaterBag::k_name(ci.i)) * Rat(2));
      if (!(R.eta[i][j] == want)) metric_ok = false;
    }
  if (metric_ok) {
    rep.witnesses.push_back(
        "restricted metric: 2 k_i on the log block, -1/(2N+2) antidiagonal");
  } else {
    rep.pass = false;
    rep.witnesses.push_back("restricted metric differs from the closed form");
  }

  // associativity of the restricted tensor at sample points
  std::mt19937_64 rng(seed);
  bool wdvv_ok = true;
  for (unsigned p = 0; p < n_points; ++p) {
    auto pt = bn_sample_point(R.coords, M, rng);
    std::vector<QMat> C(n, QMat(n, std::vector<Rat>(n, Rat(0))));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a; b < n; ++b)
        for (size_t g = b; g < n; ++g) {
          auto it = R.c.find({a, b, g});
          if (it == R.c.end()) continue;
          Rat v = it->second.eval(pt);
          C[a][b][g] = C[a][g][b] = C[b][a][g] = v;
          C[b][g][a] = C[g][a][b] = C[g][b][a] = v;
        }
    QMat H(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) H[i][j] = R.eta[i][j].eval(pt);
    QMat Hinv = mat_inverse(H);
    for (size_t a = 0; a < n && wdvv_ok; ++a)
      for (size_t b = a + 1; b < n && wdvv_ok; ++b)
        if (mat_mul(mat_mul(C[a], Hinv), C[b]) !=
            mat_mul(mat_mul(C[b], Hinv), C[a]))
          wdvv_ok = false;
  }
  if (wdvv_ok) {
    rep.witnesses.push_back(std::to_string(n_points) +
                            " sample points, restricted tensor associative");
  } else {
    rep.pass = false;
    rep.witnesses.push_back("restricted tensor fails associativity");
  }
  return rep;
}

}  // namespace wdvv
