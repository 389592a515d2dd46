#include "hopfevol/models.hpp"

#include <cmath>
#include <random>

namespace hopfevol {

namespace {

constexpr int kNumC = 27;

int cidx(int k, int i, int j) { return 9 * k + 3 * i + j; }

// [J_a, J_b] = sum_c f(a,b,c) J_c over the ordered basis {+, -, z}.
const std::vector<std::pair<int, double>>& struct_consts(int a, int b) {
  static const std::vector<std::pair<int, double>> table[3][3] = {
      {{}, {{kZ, 2.0}}, {{kPlus, -1.0}}},
      {{{kZ, -2.0}}, {}, {{kMinus, 1.0}}},
      {{{kPlus, 1.0}}, {{kMinus, -1.0}}, {}},
  };
  return table[a][b];
}

const char* su2_sym(int i) {
  switch (i) {
    case kPlus: return "J+";
    case kMinus: return "J-";
    default: return "Jz";
  }
}

int su2_bar(int i) { return i == kPlus ? kMinus : (i == kMinus ? kPlus : kZ); }

// Free-parameter slots (k, i, j).
constexpr int kFreeSlots[8][3] = {
    {kZ, kPlus, kPlus}, {kZ, kPlus, kZ},  {kZ, kMinus, kMinus}, {kZ, kMinus, kZ},
    {kZ, kZ, kPlus},    {kZ, kZ, kMinus}, {kPlus, kPlus, kZ},   {kPlus, kZ, kPlus}};

RankReport rank_report(const Eigen::MatrixXcd& m, double cutoff_factor = 1e-8) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  RankReport r;
  r.sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  r.cutoff = cutoff_factor * r.sigma_max;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > r.cutoff) ++r.rank;
  r.nullity = int(m.cols()) - r.rank;
  return r;
}

}  // namespace

Eigen::MatrixXcd qubit_rep(const std::string& sym) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  if (sym == "J+") {
    m(0, 1) = 1.0;
  } else if (sym == "J-") {
    m(1, 0) = 1.0;
  } else if (sym == "Jz") {
    m(0, 0) = 0.5;
    m(1, 1) = -0.5;
  } else {
    throw UnknownSymbol(sym);
  }
  return m;
}

namespace {

HopfData su2_base_data(Param param) {
  HopfData d;
  d.dim = 2;
  d.param = param;
  d.symbols = {"J+", "J-", "Jz"};
  for (const auto& s : d.symbols) {
    d.rep[s] = qubit_rep(s);
    d.counits[s] = Jet(0.0);
    SymTensor prim;
    prim.add_term(GenWord::gen(s), GenWord::one(), Jet(1.0));
    prim.add_term(GenWord::one(), GenWord::gen(s), Jet(1.0));
    d.coproducts[s] = prim;
    d.antipodes[s] = Jet(-1.0) * SymElement::gen(s);
  }
  d.daggers["J+"] = SymElement::gen("J-");
  d.daggers["J-"] = SymElement::gen("J+");
  d.daggers["Jz"] = SymElement::gen("Jz");
  d.relations = {
      {"J+", "J-", Jet(2.0) * SymElement::gen("Jz")},
      {"Jz", "J+", SymElement::gen("J+")},
      {"Jz", "J-", Jet(-1.0) * SymElement::gen("J-")},
  };
  return d;
}

}  // namespace

HopfModel build_trivial_su2() {
  HopfModel m;
  m.name = "trivial-su2";
  m.data = su2_base_data(Param::None);
  m.mode = HopfModel::Mode::Exact;
  m.param_value = 0.0;
  return m;
}

HopfModel build_uq_su2(Complex z, HopfModel::Mode mode, int dim) {
  if (dim != 2) throw UnsupportedDimension("uq-su2 ships the qubit representation only");
  if (mode == HopfModel::Mode::FirstOrder && z.imag() != 0.0)
    throw InconsistentInput("first-order uq-su2 requires real z");

  HopfModel m;
  m.name = mode == HopfModel::Mode::Exact ? "uq-su2-exact" : "uq-su2";
  m.mode = mode;
  m.param_value = z;
  m.data = su2_base_data(mode == HopfModel::Mode::Exact ? Param::None : Param::Z);

  // q^{a Jz} = exp((z/2) a Jz); first-order mode keeps the exponent formal.
  auto q_pow = [&](double a) {
    Jet e = mode == HopfModel::Mode::Exact ? Jet(0.5 * a * z)
                                           : Jet(0.0, Complex(0.5 * a), Param::Z);
    return GenWord::exponential("Jz", e);
  };
  auto s_coeff = [&](double a) {  // -q^{a}
    return mode == HopfModel::Mode::Exact ? Jet(-std::exp(0.5 * a * z))
                                          : Jet(-1.0, Complex(-0.5 * a), Param::Z);
  };

  for (int i : {kPlus, kMinus}) {
    const std::string s = su2_sym(i);
    SymTensor cop;
    cop.add_term(GenWord::gen(s), q_pow(-1.0), Jet(1.0));
    cop.add_term(q_pow(+1.0), GenWord::gen(s), Jet(1.0));
    m.data.coproducts[s] = cop;
    m.data.antipodes[s] = s_coeff(i == kPlus ? -1.0 : +1.0) * SymElement::gen(s);
  }

  // In exact mode the algebra relation is the q-commutator
  // [J+, J-] = (q^{2Jz} - q^{-2Jz}) / (q - q^{-1}); it reduces to 2Jz on the
  // qubit but its coproduct does not.
  if (mode == HopfModel::Mode::Exact && std::abs(z) > 1e-12) {
    Complex q = std::exp(0.5 * z);
    Jet inv(1.0 / (q - 1.0 / q));
    SymElement qnum =
        inv * (SymElement::word(GenWord::exponential("Jz", Jet(z))) -
               SymElement::word(GenWord::exponential("Jz", Jet(-z))));
    m.data.relations[0].rhs = qnum;
  }
  return m;
}

SymElement hamiltonian_expr(const HopfModel& model, const std::string& id) {
  const bool uq = model.name.rfind("uq-su2", 0) == 0;
  if (id == "hx" && uq) {
    // q^{Jz/2} (J+ + J-) q^{Jz/2}
    Jet e = model.mode == HopfModel::Mode::Exact
                ? Jet(0.25 * model.param_value)
                : Jet(0.0, Complex(0.25), Param::Z);
    GenWord q = GenWord::exponential("Jz", e);
    SymElement h;
    h.add_term(word_mul(word_mul(q, GenWord::gen("J+")), q), Jet(1.0));
    h.add_term(word_mul(word_mul(q, GenWord::gen("J-")), q), Jet(1.0));
    return h;
  }
  if (model.data.has_symbol("J+")) {
    if (id == "hx") return SymElement::gen("J+") + SymElement::gen("J-");
    if (id == "hy")
      return SymElement::gen("J+", Jet(Complex(0, -1))) +
             SymElement::gen("J-", Jet(Complex(0, 1)));
    if (id == "hz") return SymElement::gen("Jz");
  }
  if (id == "p0" && model.data.has_symbol("P0")) return SymElement::gen("P0");
  throw UnknownId("hamiltonian '" + id + "' for model " + model.name);
}

// ---------------------------------------------------------------------------
// General first-order su(2) family
// ---------------------------------------------------------------------------

double CTable::norm() const {
  double s = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += std::norm(c[k][i][j]);
  return std::sqrt(s);
}

CTable CTable::scaled(Complex s) const {
  CTable out = *this;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.c[k][i][j] *= s;
  return out;
}

std::array<Complex, 8> ctable_free(const CTable& t) {
  std::array<Complex, 8> f;
  for (int s = 0; s < 8; ++s)
    f[s] = t.at(kFreeSlots[s][0], kFreeSlots[s][1], kFreeSlots[s][2]);
  return f;
}

CTable ctable_from_free_raw(const std::array<Complex, 8>& free) {
  CTable t;
  for (int s = 0; s < 8; ++s)
    t.at(kFreeSlots[s][0], kFreeSlots[s][1], kFreeSlots[s][2]) = free[s];
  return t;
}

Eigen::VectorXcd ctable_vec(const CTable& t) {
  Eigen::VectorXcd v(kNumC);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) v(cidx(k, i, j)) = t.at(k, i, j);
  return v;
}

CTable ctable_unvec(const Eigen::VectorXcd& v) {
  CTable t;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.at(k, i, j) = v(cidx(k, i, j));
  return t;
}

Eigen::MatrixXcd homomorphism_matrix() {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(kNumC, kNumC);
  const int pairs[3][2] = {{kPlus, kMinus}, {kZ, kPlus}, {kZ, kMinus}};
  for (int p = 0; p < 3; ++p) {
    const int a = pairs[p][0], b = pairs[p][1];
    auto row = [&](int i, int j) { return 9 * p + 3 * i + j; };
    // Delta([J_a, J_b]) at first order: sum_c f(a,b,c) C^{(c)}
    for (const auto& [c, fc] : struct_consts(a, b))
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M(row(i, j), cidx(c, i, j)) += fc;
    // [Delta0 J_x, C]: C_{mn} -> f(x,m,l) (l,n) + f(x,n,l) (m,l)
    auto bracket = [&](int x, int table, double sign) {
      for (int mth = 0; mth < 3; ++mth)
        for (int nth = 0; nth < 3; ++nth) {
          for (const auto& [l, fl] : struct_consts(x, mth))
            M(row(l, nth), cidx(table, mth, nth)) += sign * fl;
          for (const auto& [l, fl] : struct_consts(x, nth))
            M(row(mth, l), cidx(table, mth, nth)) += sign * fl;
        }
    };
    bracket(a, b, -1.0);  // - [Delta0 J_a, C^{(b)}]
    bracket(b, a, +1.0);  // + [Delta0 J_b, C^{(a)}]
  }
  return M;
}

std::pair<CTable, RankReport> solve_general_su2_coproducts(
    const std::array<Complex, 8>& free) {
  Eigen::MatrixXcd M = homomorphism_matrix();
  Eigen::MatrixXcd A(kNumC + 8, kNumC);
  A.topRows(kNumC) = M;
  A.bottomRows(8).setZero();
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(kNumC + 8);
  for (int s = 0; s < 8; ++s) {
    A(kNumC + s, cidx(kFreeSlots[s][0], kFreeSlots[s][1], kFreeSlots[s][2])) = 1.0;
    rhs(kNumC + s) = free[s];
  }
  Eigen::VectorXcd x = A.completeOrthogonalDecomposition().solve(rhs);
  double resid = (A * x - rhs).norm();
  double scale = std::max(1.0, rhs.norm());
  if (resid > 1e-10 * scale)
    throw InconsistentInput("free-parameter solve residual " + std::to_string(resid));
  return {ctable_unvec(x), rank_report(M)};
}

std::pair<CTable, RankReport> solve_general_su2_coproducts(const CTable& full) {
  Eigen::MatrixXcd M = homomorphism_matrix();
  Eigen::VectorXcd v = ctable_vec(full);
  double resid = (M * v).norm();
  if (resid > 1e-10 * std::max(1.0, v.norm()))
    throw InconsistentInput("table violates the homomorphism system by " +
                            std::to_string(resid));
  return {full, rank_report(M)};
}

double dagger_pairing_defect(const CTable& t) {
  double d = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        d = std::max(d, std::abs(t.at(su2_bar(k), su2_bar(i), su2_bar(j)) -
                                 std::conj(t.at(k, i, j))));
  return d;
}

CTable apply_hermiticity(const CTable& t) {
  std::array<Complex, 8> f = ctable_free(t);
  f[0] = std::conj(f[2]);  // c^(z)_{++} from c^(z)_{--}
  f[3] = std::conj(f[1]);  // c^(z)_{-z} from c^(z)_{+z}
  f[5] = std::conj(f[4]);  // c^(z)_{z-} from c^(z)_{z+}
  // c^(+)_{z+} is the remaining dependent slot: pick it to null the dagger
  // pairing of the solved table (real-linear least squares in Re/Im).
  auto table_with = [&](Complex t7) {
    auto g = f;
    g[7] = t7;
    return solve_general_su2_coproducts(g).first;
  };
  auto violation = [&](const CTable& T) {
    Eigen::VectorXd v(2 * kNumC);
    int n = 0;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Complex d = T.at(su2_bar(k), su2_bar(i), su2_bar(j)) -
                      std::conj(T.at(k, i, j));
          v(n++) = d.real();
          v(n++) = d.imag();
        }
    return v;
  };
  Eigen::VectorXd v0 = violation(table_with(0.0));
  Eigen::MatrixXd A(2 * kNumC, 2);
  A.col(0) = violation(table_with(1.0)) - v0;
  A.col(1) = violation(table_with(Complex(0, 1))) - v0;
  Eigen::Vector2d x = A.colPivHouseholderQr().solve(-v0);
  return table_with(Complex(x(0), x(1)));
}

STable solve_antipode_first_order(const HopfModel& model) {
  const HopfData& D = model.data;
  if (D.symbols.size() != 3)
    throw UnsupportedDimension("antipode solver expects the three su(2) generators");
  const Eigen::Index d = D.dim;

  // order-0 antipode of a plain word: reversed product of (-rep).
  auto eval_s0 = [&](const GenWord& w) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(d, d);
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
      if (it->kind != Atom::Kind::Gen)
        throw NonPrimitiveExponential("antipode solver: exponential in correction");
      acc = acc * (-D.rep.at(it->sym));
    }
    return acc;
  };

  std::vector<Eigen::MatrixXcd> basis;
  for (const auto& s : D.symbols) basis.push_back(D.rep.at(s));
  basis.push_back(Eigen::MatrixXcd::Identity(d, d));

  Eigen::MatrixXcd B(d * d, 4);
  for (int m = 0; m < 4; ++m) B.col(m) = stack(basis[m]);

  STable out;
  for (const auto& sym : D.symbols) {
    SymTensor prim;
    prim.add_term(GenWord::gen(sym), GenWord::one(), Jet(1.0));
    prim.add_term(GenWord::one(), GenWord::gen(sym), Jet(1.0));
    SymTensor corr = D.coproducts.at(sym) - prim;

    // Condition at first order: sum_m s_m B_m = - sum c^(1) S0(left) right.
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& [p, c] : corr.terms) {
      Eigen::MatrixXcd right = Eigen::MatrixXcd::Identity(d, d);
      for (const auto& atom : p.second.atoms) {
        if (atom.kind != Atom::Kind::Gen)
          throw NonPrimitiveExponential("antipode solver: exponential in correction");
        right = right * D.rep.at(atom.sym);
      }
      target -= c.a1 * (eval_s0(p.first) * right);
    }
    Eigen::Vector4cd x = B.completeOrthogonalDecomposition().solve(stack(target).eval());
    out.coeffs[sym] = x;
    out.residual[sym] = (B * x - stack(target)).norm();
  }
  return out;
}

STable antipode_table_abstract(const CTable& t) {
  STable out;
  auto entry = [&](int k, int i, int j) { return t.at(k, i, j); };
  Eigen::Vector4cd sz, sp, sm;
  sz << -entry(kZ, kPlus, kZ) + entry(kZ, kZ, kPlus),
      entry(kZ, kMinus, kZ) - entry(kZ, kZ, kMinus), 0.0, 0.0;
  sp << -entry(kPlus, kPlus, kZ) + entry(kPlus, kZ, kPlus), 0.0,
      0.5 * (entry(kZ, kMinus, kZ) - entry(kZ, kZ, kMinus)), 0.0;
  sm << 0.0, entry(kPlus, kZ, kPlus) - entry(kPlus, kPlus, kZ),
      0.5 * (entry(kZ, kZ, kPlus) - entry(kZ, kPlus, kZ)), 0.0;
  out.coeffs["Jz"] = sz;
  out.coeffs["J+"] = sp;
  out.coeffs["J-"] = sm;
  out.residual["Jz"] = out.residual["J+"] = out.residual["J-"] = 0.0;
  return out;
}

HopfModel build_general_su2(const CTable& t, double h_value) {
  HopfModel m;
  m.name = "su2-general";
  m.mode = HopfModel::Mode::FirstOrder;
  m.param_value = h_value;
  m.data = su2_base_data(Param::H);

  for (int k = 0; k < 3; ++k) {
    SymTensor cop = m.data.coproducts.at(su2_sym(k));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        cop.add_term(GenWord::gen(su2_sym(i)), GenWord::gen(su2_sym(j)),
                     Jet(0.0, t.at(k, i, j), Param::H));
    m.data.coproducts[su2_sym(k)] = cop;
  }

  STable s = solve_antipode_first_order(m);
  for (int k = 0; k < 3; ++k) {
    const std::string sym = su2_sym(k);
    SymElement ant = Jet(-1.0) * SymElement::gen(sym);
    const Eigen::Vector4cd& x = s.coeffs.at(sym);
    for (int i = 0; i < 3; ++i)
      ant += Jet(0.0, x(i), Param::H) * SymElement::gen(su2_sym(i));
    ant += SymElement::one(Jet(0.0, x(3), Param::H));
    m.data.antipodes[sym] = ant;
  }
  return m;
}

CTable random_hermitian_ctable(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<Complex, 8> f;
  for (auto& v : f) v = Complex(normal(rng), normal(rng));
  return apply_hermiticity(solve_general_su2_coproducts(f).first);
}

// ---------------------------------------------------------------------------
// kappa-Galilei
// ---------------------------------------------------------------------------

HopfModel build_kappa_galilei(double kappa, const std::vector<Eigen::VectorXd>& grid,
                              const KappaOptions& opts) {
  if (grid.empty()) throw EmptyGrid("kappa-Galilei needs at least one momentum sample");
  if (!(kappa > 0)) throw InvalidState("kappa must be positive");
  const auto d = static_cast<Eigen::Index>(grid.size());
  const auto nsp = grid.front().size();
  for (const auto& p : grid)
    if (p.size() != nsp) throw DimensionMismatch("inconsistent momentum components");

  Eigen::MatrixXd g = opts.metric.value_or(Eigen::MatrixXd::Identity(nsp, nsp));
  if (g.rows() != nsp || g.cols() != nsp)
    throw DimensionMismatch("metric must be n_space x n_space");

  HopfModel m;
  m.name = opts.mapped ? "kappa-galilei-mapped" : "kappa-galilei";
  m.mode = HopfModel::Mode::FirstOrder;
  m.mapped = opts.mapped;
  m.param_value = 1.0 / kappa;
  m.metric = g;

  HopfData& D = m.data;
  D.dim = d;
  D.param = Param::InvKappa;
  D.symbols.push_back("P0");
  for (Eigen::Index i = 0; i < nsp; ++i) {
    D.symbols.push_back("P" + std::to_string(i + 1));
    m.momentum_symbols.push_back(D.symbols.back());
  }

  Eigen::VectorXd p0(d);
  if (opts.p0_diagonal) {
    if (opts.p0_diagonal->size() != d)
      throw DimensionMismatch("P0 override length must match the grid");
    p0 = *opts.p0_diagonal;
  } else {
    for (Eigen::Index gpt = 0; gpt < d; ++gpt) p0(gpt) = 0.5 * grid[gpt].squaredNorm();
  }
  D.rep["P0"] = p0.cast<Complex>().asDiagonal();
  for (Eigen::Index i = 0; i < nsp; ++i) {
    Eigen::VectorXcd pi(d);
    for (Eigen::Index gpt = 0; gpt < d; ++gpt) pi(gpt) = grid[gpt](i);
    D.rep[m.momentum_symbols[size_t(i)]] = Eigen::MatrixXcd(pi.asDiagonal());
  }

  const Jet def(0.0, opts.mapped ? Complex(0.0, -1.0) : Complex(1.0, 0.0),
                Param::InvKappa);
  for (const auto& s : D.symbols) {
    D.counits[s] = Jet(0.0);
    D.daggers[s] = SymElement::gen(s);
    SymTensor prim;
    prim.add_term(GenWord::gen(s), GenWord::one(), Jet(1.0));
    prim.add_term(GenWord::one(), GenWord::gen(s), Jet(1.0));
    D.coproducts[s] = prim;
    D.antipodes[s] = Jet(-1.0) * SymElement::gen(s);
  }

  // P^2 = g^{ij} P_i P_j as a word polynomial.
  SymElement p_squared;
  for (Eigen::Index i = 0; i < nsp; ++i)
    for (Eigen::Index j = 0; j < nsp; ++j) {
      if (g(i, j) == 0.0) continue;
      p_squared.add_term(word_mul(GenWord::gen(m.momentum_symbols[size_t(i)]),
                                  GenWord::gen(m.momentum_symbols[size_t(j)])),
                         Jet(g(i, j)));
    }

  {
    SymTensor cop = D.coproducts.at("P0");
    for (Eigen::Index i = 0; i < nsp; ++i)
      for (Eigen::Index j = 0; j < nsp; ++j) {
        if (g(i, j) == 0.0) continue;
        cop.add_term(GenWord::gen(m.momentum_symbols[size_t(i)]),
                     GenWord::gen(m.momentum_symbols[size_t(j)]), Jet(g(i, j)) * def);
      }
    D.coproducts["P0"] = cop;
    D.antipodes["P0"] = Jet(-1.0) * SymElement::gen("P0") + def * p_squared;
  }
  for (const auto& ps : m.momentum_symbols) {
    SymTensor cop = D.coproducts.at(ps);
    cop.add_term(GenWord::gen(ps), GenWord::gen("P0"), def);
    D.coproducts[ps] = cop;
    D.antipodes[ps] =
        Jet(-1.0) * SymElement::gen(ps) +
        def * SymElement::word(word_mul(GenWord::gen(ps), GenWord::gen("P0")));
  }

  for (size_t a = 0; a < D.symbols.size(); ++a)
    for (size_t b = a + 1; b < D.symbols.size(); ++b)
      D.relations.push_back({D.symbols[a], D.symbols[b], SymElement::zero()});

  return m;
}

HopfModel build_kappa_galilei_default(double kappa, bool mapped) {
  std::vector<Eigen::VectorXd> grid;
  for (int gpt = 0; gpt < 8; ++gpt) {
    Eigen::VectorXd p(1);
    p(0) = -1.0 + 2.0 * gpt / 7.0;
    grid.push_back(p);
  }
  KappaOptions opts;
  opts.mapped = mapped;
  return build_kappa_galilei(kappa, grid, opts);
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

AuditReport audit_model(const HopfModel& model) {
  const HopfData& D = model.data;
  const Complex v = model.param_value;
  const Eigen::Index d = D.dim;
  AuditReport r;

  for (const auto& sym : D.symbols) {
    SymElement x = SymElement::gen(sym);
    SymTensor dx = coproduct(x, D);
    Eigen::MatrixXcd mx = evaluate_at(evaluate_tensor(dx, D), v);

    Eigen::MatrixXcd mdag =
        evaluate_at(evaluate_tensor(coproduct(dagger_of(x, D), D), D), v);
    r.coproduct_hermiticity_defect =
        std::max(r.coproduct_hermiticity_defect, (mx.adjoint() - mdag).norm());

    Eigen::MatrixXcd lhs =
        evaluate_at(evaluate(tensor_contract(antipode_leg(dx, 0, D)), D), v);
    Complex eps = counit(x, D).at(v);
    r.antipode_condition_defect = std::max(
        r.antipode_condition_defect,
        (lhs - eps * Eigen::MatrixXcd::Identity(d, d)).norm());

    SymElement left_applied, right_applied;
    for (const auto& [p, c] : dx.terms) {
      left_applied.add_term(p.second, c * counit(SymElement::word(p.first), D));
      right_applied.add_term(p.first, c * counit(SymElement::word(p.second), D));
    }
    Eigen::MatrixXcd ex = evaluate_at(evaluate(x, D), v);
    r.counit_defect = std::max(
        r.counit_defect,
        std::max((evaluate_at(evaluate(left_applied, D), v) - ex).norm(),
                 (evaluate_at(evaluate(right_applied, D), v) - ex).norm()));
  }

  for (const auto& rel : D.relations) {
    Operator A = evaluate_tensor(coproduct(SymElement::gen(rel.a), D), D);
    Operator B = evaluate_tensor(coproduct(SymElement::gen(rel.b), D), D);
    Operator rhs = evaluate_tensor(coproduct(rel.rhs, D), D);
    Operator defect = A * B - B * A - rhs;
    r.coproduct_homomorphism_defect =
        std::max(r.coproduct_homomorphism_defect,
                 evaluate_at(defect, v).norm());
  }
  return r;
}

}  // namespace hopfevol
