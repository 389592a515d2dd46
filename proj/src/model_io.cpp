#include "hopfevol/model_io.hpp"

#include <fstream>

namespace hopfevol {

namespace {

Complex complex_from(const Json& j, const char* what) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw BadFile(std::string("expected [re, im] for ") + what);
}

GenWord word_from(const Json& j, const char* what) {
  if (!j.is_array()) throw BadFile(std::string("expected symbol list for ") + what);
  GenWord w;
  for (const auto& s : j) {
    if (!s.is_string()) throw BadFile(std::string("non-string symbol in ") + what);
    w.atoms.push_back(Atom::gen(s.get<std::string>()));
  }
  return w;
}

}  // namespace

HopfModel parse_custom_model(const Json& j) {
  if (!j.contains("schema_version"))
    throw BadFile("missing mandatory field schema_version");
  if (j["schema_version"].get<int>() != 1)
    throw BadFile("unsupported schema_version");
  for (const char* field : {"dimension", "param", "generators", "representation",
                            "dagger"})
    if (!j.contains(field)) throw BadFile(std::string("missing field ") + field);

  HopfModel m;
  m.name = j.value("name", std::string("custom"));
  m.mode = HopfModel::Mode::FirstOrder;
  m.param_value = j.value("param_value", 0.1);

  HopfData& D = m.data;
  D.dim = j["dimension"].get<int>();
  if (D.dim < 1) throw BadFile("dimension must be positive");
  D.param = param_from_name(j["param"].get<std::string>());
  if (D.param == Param::None) throw BadFile("custom models need a named parameter");

  for (const auto& g : j["generators"]) D.symbols.push_back(g.get<std::string>());
  if (D.symbols.empty()) throw BadFile("no generators");

  for (const auto& sym : D.symbols) {
    if (!j["representation"].contains(sym))
      throw BadFile("missing representation for " + sym);
    const Json& rows = j["representation"][sym];
    if (!rows.is_array() || Eigen::Index(rows.size()) != D.dim)
      throw BadFile("representation of " + sym + " must be " +
                    std::to_string(D.dim) + " rows");
    Eigen::MatrixXcd r(D.dim, D.dim);
    for (Eigen::Index i = 0; i < D.dim; ++i) {
      if (Eigen::Index(rows[i].size()) != D.dim)
        throw BadFile("representation of " + sym + " is not square");
      for (Eigen::Index k = 0; k < D.dim; ++k)
        r(i, k) = complex_from(rows[i][k], "representation entry");
    }
    D.rep[sym] = r;

    SymTensor prim;
    prim.add_term(GenWord::gen(sym), GenWord::one(), Jet(1.0));
    prim.add_term(GenWord::one(), GenWord::gen(sym), Jet(1.0));
    D.coproducts[sym] = prim;
    D.antipodes[sym] = Jet(-1.0) * SymElement::gen(sym);
    D.counits[sym] = Jet(0.0);
  }

  if (j.contains("counits"))
    for (auto it = j["counits"].begin(); it != j["counits"].end(); ++it) {
      if (!D.rep.count(it.key())) throw BadFile("counit for unknown symbol " + it.key());
      D.counits[it.key()] = Jet(complex_from(it.value(), "counit"));
    }

  for (auto it = j["dagger"].begin(); it != j["dagger"].end(); ++it) {
    if (!D.rep.count(it.key()) || !D.rep.count(it.value().get<std::string>()))
      throw BadFile("dagger pairing references unknown symbol");
    D.daggers[it.key()] = SymElement::gen(it.value().get<std::string>());
  }
  for (const auto& sym : D.symbols) {
    if (!D.daggers.count(sym)) throw BadFile("missing dagger image for " + sym);
    // involution check
    const auto& img = D.daggers.at(sym).terms.begin()->first.atoms[0].sym;
    if (D.daggers.at(img).terms.begin()->first.atoms[0].sym != sym)
      throw BadFile("dagger pairing is not an involution at " + sym);
  }

  for (const auto& corr : j.value("coproduct_corrections", Json::array())) {
    const std::string target = corr.at("target").get<std::string>();
    if (!D.rep.count(target)) throw BadFile("correction targets unknown symbol");
    SymTensor cop = D.coproducts.at(target);
    cop.add_term(word_from(corr.at("left"), "left word"),
                 word_from(corr.at("right"), "right word"),
                 Jet(0.0, complex_from(corr.at("coeff"), "coeff"), D.param));
    D.coproducts[target] = cop;
  }
  for (const auto& corr : j.value("antipode_corrections", Json::array())) {
    const std::string target = corr.at("target").get<std::string>();
    if (!D.rep.count(target)) throw BadFile("correction targets unknown symbol");
    D.antipodes[target] +=
        SymElement::word(word_from(corr.at("word"), "antipode word"),
                         Jet(0.0, complex_from(corr.at("coeff"), "coeff"), D.param));
  }

  // Recover commutation relations from the representation where they close
  // on span{generators, identity}.
  const Eigen::Index d = D.dim;
  Eigen::MatrixXcd B(d * d, Eigen::Index(D.symbols.size()) + 1);
  for (size_t s = 0; s < D.symbols.size(); ++s)
    B.col(Eigen::Index(s)) = stack(D.rep.at(D.symbols[s]));
  Eigen::MatrixXcd idm = Eigen::MatrixXcd::Identity(d, d);
  B.col(Eigen::Index(D.symbols.size())) = stack(idm);
  auto cod = B.completeOrthogonalDecomposition();
  for (size_t a = 0; a < D.symbols.size(); ++a)
    for (size_t b = a + 1; b < D.symbols.size(); ++b) {
      Eigen::MatrixXcd comm = D.rep.at(D.symbols[a]) * D.rep.at(D.symbols[b]) -
                              D.rep.at(D.symbols[b]) * D.rep.at(D.symbols[a]);
      Eigen::VectorXcd x = cod.solve(stack(comm).eval());
      if ((B * x - stack(comm)).norm() > 1e-10) continue;
      SymElement rhs;
      for (size_t s = 0; s < D.symbols.size(); ++s)
        rhs += Jet(x(Eigen::Index(s))) * SymElement::gen(D.symbols[s]);
      rhs += SymElement::one(Jet(x(Eigen::Index(D.symbols.size()))));
      D.relations.push_back({D.symbols[a], D.symbols[b], rhs});
    }
  return m;
}

HopfModel load_custom_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadFile("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw BadFile(std::string("json parse: ") + e.what());
  }
  try {
    return parse_custom_model(j);
  } catch (const Json::exception& e) {
    throw BadFile(std::string("schema: ") + e.what());
  }
}

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const Eigen::VectorXcd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

Json to_json(const AuditReport& r) {
  return Json{{"coproduct_hermiticity",
               {{"defect", r.coproduct_hermiticity_defect}, {"pass", r.hermiticity_ok()}}},
              {"coproduct_homomorphism",
               {{"defect", r.coproduct_homomorphism_defect}, {"pass", r.homomorphism_ok()}}},
              {"antipode_condition",
               {{"defect", r.antipode_condition_defect}, {"pass", r.antipode_ok()}}},
              {"counit", {{"defect", r.counit_defect}, {"pass", r.counit_ok()}}},
              {"tolerance", r.tolerance},
              {"pass", r.all_ok()}};
}

Json to_json(const PreservationResult& r) {
  return Json{{"trace", {{"defect", r.trace_defect}, {"pass", r.trace_ok()}}},
              {"hermiticity", {{"defect", r.herm_defect}, {"pass", r.herm_ok()}}},
              {"tolerance", r.tolerance}};
}

Json to_json(const GeneratorReport& r) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (r.kossakowski + r.kossakowski.adjoint()), Eigen::EigenvaluesOnly);
  Json eigs = Json::array();
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    eigs.push_back(es.eigenvalues()(i));
  return Json{{"preservation", to_json(r.preservation)},
              {"h_eff", matrix_json(r.h_eff)},
              {"hamiltonian_residual", r.hamiltonian_residual},
              {"kossakowski", matrix_json(r.kossakowski)},
              {"kossakowski_eigenvalues", eigs},
              {"kossakowski_min_eig", r.kossakowski_min_eig},
              {"kossakowski_norm", r.kossakowski_norm},
              {"reconstruction_residual", r.reconstruction_residual},
              {"verdict", verdict_name(r.verdict)}};
}

Json to_json(const PositivityWitness& w) {
  return Json{{"value", w.value},
              {"violated", w.violated},
              {"imag_defect", w.imag_defect},
              {"phi", vector_json(w.phi)},
              {"psi", vector_json(w.psi)}};
}

Json to_json(const SolutionSet& s) {
  Json nullspace = Json::array();
  for (const auto& n : s.nullspace) {
    Json dir = Json::array();
    for (int i = 0; i < 8; ++i) dir.push_back(n(i));
    nullspace.push_back(dir);
  }
  Json basepoint = Json::array();
  for (int i = 0; i < 8; ++i) basepoint.push_back(s.basepoint(i));
  auto c = s.coeffs();
  return Json{{"kind", solution_kind_name(s.kind)},
              {"basepoint", basepoint},
              {"coefficients",
               {{"alpha", {c.alpha.real(), c.alpha.imag()}},
                {"beta", {c.beta.real(), c.beta.imag()}},
                {"gamma", {c.gamma.real(), c.gamma.imag()}},
                {"delta", {c.delta.real(), c.delta.imag()}}}},
              {"nullspace", nullspace},
              {"rank", s.rank},
              {"residual", s.residual}};
}

Json to_json(const FeasibilityResult& f) {
  Json out{{"feasible", f.feasible},
           {"image_norm", f.image_norm},
           {"kinematic_residual", f.kinematic_residual},
           {"solution_space_dim", f.solution_space_dim},
           {"certificate", f.certificate}};
  if (f.witness) {
    Json w = Json::array();
    for (int i = 0; i < 8; ++i) w.push_back((*f.witness)(i));
    out["witness"] = w;
    out["kossakowski"] = matrix_json(f.kossakowski);
  }
  return out;
}

Json to_json(const ScenarioReport& r) {
  return Json{{"tables", r.tables},
              {"max_basepoint_deviation", r.max_basepoint_deviation},
              {"max_remainder", r.max_remainder},
              {"consistent", r.consistent}};
}

}  // namespace hopfevol
