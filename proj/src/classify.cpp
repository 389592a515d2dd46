#include "hopfevol/classify.hpp"

#include <random>

namespace hopfevol {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::VonNeumann: return "VON_NEUMANN";
    case Verdict::Gksl: return "GKSL";
    case Verdict::NonGksl: return "NON_GKSL";
    case Verdict::NotHermiticityPreserving: return "NOT_HERMITICITY_PRESERVING";
    case Verdict::NotTracePreserving: return "NOT_TRACE_PRESERVING";
  }
  return "?";
}

namespace {

Eigen::Index state_dim(const Eigen::MatrixXcd& L) {
  auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(L.rows()))));
  if (d * d != L.rows() || L.rows() != L.cols())
    throw DimensionMismatch("superoperator matrix must be d^2 x d^2");
  return d;
}

Eigen::MatrixXcd apply_superop(const Eigen::MatrixXcd& L, const Eigen::MatrixXcd& rho) {
  return unstack(Eigen::VectorXcd(L * stack(rho)));
}

}  // namespace

PreservationResult preservation_tests(const Eigen::MatrixXcd& L) {
  const Eigen::Index d = state_dim(L);
  PreservationResult r;
  // Tr L(E_k) for all matrix units is the row vector vec(I)^dag L.
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::RowVectorXcd tr = stack(id).adjoint() * L;
  r.trace_defect = tr.cwiseAbs().maxCoeff();
  for (Eigen::Index p = 0; p < d; ++p)
    for (Eigen::Index q = 0; q < d; ++q) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
      e(p, q) = 1.0;
      Eigen::MatrixXcd diff = apply_superop(L, e).adjoint() - apply_superop(L, e.adjoint());
      r.herm_defect = std::max(r.herm_defect, diff.norm());
    }
  return r;
}

Eigen::MatrixXcd commutator_superop(const Eigen::MatrixXcd& h) {
  const Eigen::Index d = h.rows();
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
  return Complex(0, -1) * (kron(I, h) - kron(h.transpose().eval(), I));
}

HamiltonianPart hamiltonian_projection(const Eigen::MatrixXcd& L) {
  const Eigen::Index d = state_dim(L);
  HermitianBasis basis = hermitian_basis(d);
  // The commutator superoperators G_k = -i(I (x) F_k - F_k^T (x) I) are
  // mutually orthogonal with ||G_k||^2 = 2d, so the projection is direct.
  HamiltonianPart out;
  out.h_eff = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (size_t k = 1; k < basis.elements.size(); ++k) {
    Eigen::MatrixXcd G = commutator_superop(basis.elements[k]);
    double x = (G.adjoint() * L).trace().real() / (2.0 * d);
    out.h_eff += x * basis.elements[k];
    proj += x * G;
  }
  out.residual = (L - proj).norm();
  return out;
}

Eigen::MatrixXcd hamiltonian_remainder(const Eigen::MatrixXcd& L) {
  return L - commutator_superop(hamiltonian_projection(L).h_eff);
}

GeneratorReport gksl_decompose(const Eigen::MatrixXcd& L) {
  const Eigen::Index d = state_dim(L);
  GeneratorReport rep;
  rep.preservation = preservation_tests(L);
  rep.h_eff = Eigen::MatrixXcd::Zero(d, d);
  rep.kossakowski = Eigen::MatrixXcd::Zero(d * d - 1, d * d - 1);
  if (!rep.preservation.trace_ok()) {
    rep.verdict = Verdict::NotTracePreserving;
    return rep;
  }
  if (!rep.preservation.herm_ok()) {
    rep.verdict = Verdict::NotHermiticityPreserving;
    return rep;
  }

  HermitianBasis basis = hermitian_basis(d);
  const auto n = static_cast<Eigen::Index>(basis.elements.size());

  // Expand L = sum_ij a_ij (F_j^T (x) F_i); the maps rho -> F_i rho F_j form
  // an orthonormal basis of superoperators.
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::MatrixXcd E =
          kron(basis.elements[j].transpose().eval(), basis.elements[i]);
      a(i, j) = (E.adjoint() * L).trace();
    }

  // Split off the F_0 = I/sqrt(d) row/column: L = K rho + rho K^dag + Phi.
  Eigen::MatrixXcd K =
      (a(0, 0) / (2.0 * d)) * Eigen::MatrixXcd::Identity(d, d);
  for (Eigen::Index i = 1; i < n; ++i)
    K += (a(i, 0) / std::sqrt(double(d))) * basis.elements[i];
  Eigen::MatrixXcd h = Complex(0, 0.5) * (K - K.adjoint());

  rep.h_eff = traceless(h);
  rep.kossakowski = a.bottomRightCorner(n - 1, n - 1);
  rep.kossakowski_norm = rep.kossakowski.norm();

  // Reconstruct and measure the residual.
  Eigen::MatrixXcd recon = commutator_superop(rep.h_eff);
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(d, d);
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 1; j < n; ++j) {
      if (a(i, j) == 0.0) continue;
      const Eigen::MatrixXcd& Fi = basis.elements[i];
      const Eigen::MatrixXcd& Fj = basis.elements[j];
      Eigen::MatrixXcd FjFi = Fj * Fi;
      recon += a(i, j) * (kron(Fj.transpose().eval(), Fi) -
                          0.5 * kron(I, FjFi) -
                          0.5 * kron(FjFi.transpose().eval(), I));
    }
  rep.reconstruction_residual = (L - recon).norm();
  rep.hamiltonian_residual = hamiltonian_projection(L).residual;

  Eigen::MatrixXcd sym = 0.5 * (rep.kossakowski + rep.kossakowski.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  rep.kossakowski_min_eig = es.eigenvalues()(0);

  if (rep.kossakowski_norm < 1e-10)
    rep.verdict = Verdict::VonNeumann;
  else if (rep.kossakowski_min_eig >= -1e-10 * (1.0 + rep.kossakowski_norm))
    rep.verdict = Verdict::Gksl;
  else
    rep.verdict = Verdict::NonGksl;
  return rep;
}

PositivityWitness positivity_witness(const Eigen::MatrixXcd& L,
                                     const Eigen::VectorXcd& phi,
                                     const Eigen::VectorXcd& psi) {
  const Eigen::Index d = state_dim(L);
  if (phi.size() != d || psi.size() != d)
    throw DimensionMismatch("witness states must match the generator");
  Eigen::VectorXcd nphi = phi.normalized();
  Eigen::VectorXcd npsi = psi.normalized();
  if (std::abs(npsi.dot(nphi)) > 1e-10)
    throw NotOrthogonal("witness pair overlap " +
                        std::to_string(std::abs(npsi.dot(nphi))));
  Eigen::MatrixXcd rho0 = nphi * nphi.adjoint();
  Complex w = npsi.dot(apply_superop(L, rho0) * npsi);
  PositivityWitness out;
  out.phi = nphi;
  out.psi = npsi;
  out.value = w.real();
  out.imag_defect = std::abs(w.imag());
  out.violated = out.value < -1e-10;
  return out;
}

PositivityWitness positivity_witness_search(const Eigen::MatrixXcd& L,
                                            std::uint64_t seed, int samples) {
  const Eigen::Index d = state_dim(L);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&]() {
    Eigen::VectorXcd v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(normal(rng), normal(rng));
    return v;
  };
  PositivityWitness best;
  bool have = false;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXcd phi = draw().normalized();
    Eigen::VectorXcd psi = draw();
    psi -= phi * phi.dot(psi);  // Gram-Schmidt against phi
    double nrm = psi.norm();
    if (nrm < 1e-8) continue;
    psi /= nrm;
    PositivityWitness w = positivity_witness(L, phi, psi);
    if (!have || w.value < best.value) {
      best = w;
      have = true;
    }
  }
  return best;
}

}  // namespace hopfevol
