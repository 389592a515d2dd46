// Command-line front end: model audits, generator analysis, coefficient
// solving, time evolution, and the bundled verification suite.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfevol/model_io.hpp"
#include "hopfevol/reproduce.hpp"

using namespace hopfevol;

namespace {

constexpr const char* kVersion = "0.1.0";

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidState("empty number");
  auto parse_real = [](const std::string& t) {
    try {
      size_t used = 0;
      double v = std::stod(t, &used);
      if (used != t.size()) throw InvalidState("bad number '" + t + "'");
      return v;
    } catch (const std::logic_error&) {
      throw InvalidState("bad number '" + t + "'");
    }
  };
  if (s.back() != 'i' && s.back() != 'I') return Complex(parse_real(s), 0.0);

  // Find the sign separating the real part, skipping exponent signs.
  size_t split = std::string::npos;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i;
  }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = s.substr(split == std::string::npos ? 0 : split);
  im.pop_back();  // trailing 'i'
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(re.empty() ? 0.0 : parse_real(re), parse_real(im));
}

struct ModelArgs {
  std::string model = "uq-su2";
  std::string file;
  std::string z = "0.1";
  double h = 0.1;
  double inv_kappa = 0.1;
  double scale = 1.0;

  void attach(CLI::App* cmd, bool with_file = true) {
    cmd->add_option("--model", model,
                    "model id (see `models`); default uq-su2");
    if (with_file) cmd->add_option("--file", file, "custom model JSON file");
    cmd->add_option("--z", z, "deformation parameter z (complex, e.g. 0.3i)");
    cmd->add_option("--h", h, "deformation parameter h");
    cmd->add_option("--inv-kappa", inv_kappa, "deformation parameter 1/kappa");
    cmd->add_option("--scale", scale, "energy scale of the Hamiltonian");
  }

  bool is_demo() const {
    return model == "damping-demo" || model == "redfield-demo";
  }

  HopfModel build() const {
    if (!file.empty()) return load_custom_model(file);
    Complex zc = parse_complex(z);
    if (model == "trivial-su2") return build_trivial_su2();
    if (model == "uq-su2") return build_uq_su2(zc, HopfModel::Mode::FirstOrder);
    if (model == "uq-su2-exact") return build_uq_su2(zc, HopfModel::Mode::Exact);
    if (model == "su2-general")
      return build_general_su2(random_hermitian_ctable(1), h);
    if (model == "kappa-galilei")
      return build_kappa_galilei_default(1.0 / inv_kappa, false);
    if (model == "kappa-galilei-mapped")
      return build_kappa_galilei_default(1.0 / inv_kappa, true);
    throw UnknownId("model '" + model + "'");
  }

  SuperOp demo_generator() const {
    if (model == "damping-demo") return amplitude_damping_generator();
    if (model == "redfield-demo") return redfield_demo_generator(scale);
    throw UnknownId("model '" + model + "'");
  }

  Complex demo_value() const {
    return model == "redfield-demo" ? parse_complex(z) : Complex(0.0);
  }
};

PrescriptionCoeffs coeffs_from(const std::string& preset, const std::string& coeffs) {
  if (!coeffs.empty()) {
    std::vector<Complex> v;
    std::string cur;
    for (char c : coeffs + ",") {
      if (c == ',') {
        v.push_back(parse_complex(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (v.size() != 4) throw InvalidState("--coeffs needs 4 complex entries");
    return {v[0], v[1], v[2], v[3]};
  }
  if (preset == "quarter") return PrescriptionCoeffs::quarter();
  if (preset == "half") return PrescriptionCoeffs::half();
  throw InvalidState("unknown preset '" + preset + "'");
}

Eigen::MatrixXcd rho0_from(const std::string& spec, Eigen::Index dim) {
  if (!spec.empty() && spec.front() == '[') {
    Json j = Json::parse(spec, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InvalidState("bad inline state");
    const auto d = static_cast<Eigen::Index>(j.size());
    if (d != dim) throw InvalidState("inline state dimension mismatch");
    Eigen::MatrixXcd rho(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (Eigen::Index(j[i].size()) != d) throw InvalidState("inline state not square");
      for (Eigen::Index k = 0; k < d; ++k) {
        const Json& e = j[i][k];
        if (e.is_number())
          rho(i, k) = e.get<double>();
        else if (e.is_array() && e.size() == 2)
          rho(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        else
          throw InvalidState("inline state entries must be numbers or [re,im]");
      }
    }
    return rho;
  }
  return named_state(spec, dim);
}

void emit(const Json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw BadFile("cannot write " + out);
    f << doc.dump(2) << "\n";
  }
}

Json document(const std::string& command, const Json& params, const Json& results) {
  return Json{{"tool", "hopfevol"},
              {"version", kVersion},
              {"schema_version", 1},
              {"command", command},
              {"params", params},
              {"results", results}};
}

int run(int argc, char** argv) {
  CLI::App app{"Hopf-algebra deformed quantum evolution toolkit"};
  app.require_subcommand(1);
  // keep --help only: the short -h would shadow the --h parameter flag
  app.set_help_flag("--help", "print help");
  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->set_help_flag("--help", "print help");
    return s;
  };

  // analyze ------------------------------------------------------------
  auto* analyze = sub("analyze", "classify a generator");
  ModelArgs am;
  am.attach(analyze);
  std::string a_ham = "", a_preset = "quarter", a_coeffs = "", a_out = "";
  std::uint64_t a_seed = 1;
  analyze->add_option("--ham", a_ham, "hamiltonian id (hx, hy, hz, p0)");
  analyze->add_option("--preset", a_preset, "coefficient preset: quarter | half");
  analyze->add_option("--coeffs", a_coeffs, "4 complex coefficients a,b,c,d");
  analyze->add_option("--seed", a_seed, "seed for the witness search");
  analyze->add_option("--out", a_out, "write the JSON report here");

  // evolve -------------------------------------------------------------
  auto* evolve_cmd = sub("evolve", "integrate a trajectory");
  ModelArgs em;
  em.attach(evolve_cmd);
  std::string e_ham = "", e_preset = "quarter", e_coeffs = "", e_rho0 = "mixed",
              e_out = "";
  double e_t = 1.0, e_dt = 1e-3;
  evolve_cmd->add_option("--ham", e_ham, "hamiltonian id");
  evolve_cmd->add_option("--preset", e_preset, "coefficient preset");
  evolve_cmd->add_option("--coeffs", e_coeffs, "4 complex coefficients");
  evolve_cmd->add_option("--rho0", e_rho0,
                         "initial state: z+ z- x+ x- y+ y- mixed or inline [[..]]");
  evolve_cmd->add_option("--t", e_t, "final time");
  evolve_cmd->add_option("--dt", e_dt, "step size");
  evolve_cmd->add_option("--out", e_out, "write the CSV here (default stdout)");

  // audit ---------------------------------------------------------------
  auto* audit_cmd = sub("audit", "audit a model's structure maps");
  ModelArgs um;
  um.attach(audit_cmd);
  std::string u_out = "";
  audit_cmd->add_option("--out", u_out, "write the JSON report here");

  // solve-coeffs ---------------------------------------------------------
  auto* solve_cmd = sub("solve-coeffs",
                                       "solve the admissibility system");
  ModelArgs sm;
  sm.attach(solve_cmd);
  std::string s_ham = "", s_out = "";
  bool s_feas = false;
  solve_cmd->add_option("--ham", s_ham, "hamiltonian id");
  solve_cmd->add_flag("--feasibility", s_feas, "also run the Lindblad feasibility check");
  solve_cmd->add_option("--out", s_out, "write the JSON report here");

  // reproduce ------------------------------------------------------------
  auto* repro = sub("reproduce", "run the verification suite");
  std::string r_item = "", r_out = "";
  repro->add_option("--item", r_item, "run a single item by id");
  repro->add_option("--out", r_out, "write the JSON report here");

  // models ----------------------------------------------------------------
  auto* models_cmd = sub("models", "list the built-in models");
  std::string m_sub = "list";
  models_cmd->add_option("verb", m_sub, "list")->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: bad-arguments: " << e.get_name() << "\n";
    return 3;
  }

  if (*analyze) {
    PrescriptionCoeffs c = coeffs_from(a_preset, a_coeffs);
    Json results;
    Eigen::MatrixXcd L;
    Complex value;
    if (am.is_demo()) {
      SuperOp s = am.demo_generator();
      value = am.demo_value();
      L = s.at(value);
    } else {
      HopfModel model = am.build();
      if (a_ham.empty()) a_ham = model.data.has_symbol("P0") ? "p0" : "hx";
      HamiltonianSpec h = hamiltonian(model, a_ham, am.scale);
      value = model.param_value;
      L = build_generator(h, model, c).at(value);
      results["audit"] = to_json(audit_model(model));
    }
    GeneratorReport rep = gksl_decompose(L);
    results["preservation"] = to_json(rep.preservation);
    results["generator"] = to_json(rep);
    results["witness_search"] = to_json(positivity_witness_search(L, a_seed));
    Json params{{"model", am.model},       {"ham", a_ham},
                {"preset", a_preset},      {"coeffs", a_coeffs},
                {"param_value", {value.real(), value.imag()}},
                {"seed", a_seed}};
    emit(document("analyze", params, results), a_out);
    return 0;
  }

  if (*evolve_cmd) {
    PrescriptionCoeffs c = coeffs_from(e_preset, e_coeffs);
    SuperOp L;
    Complex value;
    if (em.is_demo()) {
      L = em.demo_generator();
      value = em.demo_value();
    } else {
      HopfModel model = em.build();
      if (e_ham.empty()) e_ham = model.data.has_symbol("P0") ? "p0" : "hx";
      L = build_generator(hamiltonian(model, e_ham, em.scale), model, c);
      value = model.param_value;
    }
    Eigen::MatrixXcd rho0 = rho0_from(e_rho0, L.dim);
    Trajectory traj = evolve(L, rho0, e_t, e_dt, value);
    if (e_out.empty()) {
      write_trajectory_csv(traj, std::cout);
    } else {
      std::ofstream f(e_out);
      if (!f) throw BadFile("cannot write " + e_out);
      write_trajectory_csv(traj, f);
    }
    const auto& m = traj.monitors.back();
    std::cerr << "final t=" << traj.times.back() << " trace_defect=" << m.trace_defect
              << " herm_defect=" << m.herm_defect << " min_eig=" << m.min_eig
              << " purity=" << m.purity << "\n";
    return 0;
  }

  if (*audit_cmd) {
    if (um.is_demo()) throw UnknownId("audit needs a Hopf model, not a demo generator");
    HopfModel model = um.build();
    AuditReport rep = audit_model(model);
    Json params{{"model", um.model}, {"file", um.file}};
    emit(document("audit", params, to_json(rep)), u_out);
    return rep.all_ok() ? 0 : 1;
  }

  if (*solve_cmd) {
    if (sm.is_demo()) throw UnknownId("solve-coeffs needs a Hopf model");
    HopfModel model = sm.build();
    if (s_ham.empty()) s_ham = model.data.has_symbol("P0") ? "p0" : "hx";
    HamiltonianSpec h = hamiltonian(model, s_ham, sm.scale);
    Json results{{"solution", to_json(solve_prescription(model, h))}};
    if (s_feas) results["feasibility"] = to_json(lindblad_feasibility(model, h));
    Json params{{"model", sm.model}, {"ham", s_ham}};
    emit(document("solve-coeffs", params, results), s_out);
    return 0;
  }

  if (*repro) {
    std::vector<ReproItem> items;
    if (r_item.empty())
      items = run_reproduce_all();
    else
      items.push_back(run_reproduce_item(r_item));
    bool all = true;
    Json jitems = Json::array();
    for (const auto& it : items) {
      all = all && it.pass;
      std::cout << (it.pass ? "[PASS] " : "[FAIL] ") << it.id << ": " << it.details
                << "\n";
      jitems.push_back({{"id", it.id},
                        {"description", it.description},
                        {"pass", it.pass},
                        {"details", it.details}});
    }
    std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << " (" << items.size()
              << " items)\n";
    if (!r_out.empty())
      emit(document("reproduce", Json{{"item", r_item}},
                    Json{{"items", jitems}, {"pass", all}}),
           r_out);
    return all ? 0 : 1;
  }

  if (*models_cmd) {
    Json list = Json::array();
    auto add = [&](const std::string& id, const std::string& note) {
      list.push_back({{"id", id}, {"note", note}});
    };
    add("trivial-su2", "undeformed su(2) on the qubit");
    add("uq-su2", "q-deformed su(2), first order in z (--z)");
    add("uq-su2-exact", "q-deformed su(2), numeric q = e^{z/2} (--z, complex ok)");
    add("su2-general", "general first-order deformation, random hermiticity-constrained table (--h)");
    add("kappa-galilei", "deformed translations on an 8-point momentum grid (--inv-kappa)");
    add("kappa-galilei-mapped", "same with the deformation rotated by -i (non-physical)");
    add("damping-demo", "amplitude damping generator (not a Hopf model)");
    add("redfield-demo", "Redfield-like demo generator, first order in z");
    std::cout << Json{{"models", list}}.dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnknownId& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownSymbol& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
}
