#include "hopfevol/symalg.hpp"

#include <ostream>

#include <unsupported/Eigen/MatrixFunctions>

namespace hopfevol {

std::ostream& operator<<(std::ostream& os, const Jet& j) {
  os << j.a0;
  if (j.tag != Param::None) os << " + (" << j.a1 << ")*" << param_name(j.tag);
  return os;
}

bool operator==(const Atom& a, const Atom& b) {
  return a.kind == b.kind && a.sym == b.sym &&
         (a.kind == Atom::Kind::Gen || a.exponent == b.exponent);
}

bool atom_less(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.sym != b.sym) return a.sym < b.sym;
  if (a.kind == Atom::Kind::Gen) return false;
  if (a.exponent == b.exponent) return false;
  return jet_less(a.exponent, b.exponent);
}

void GenWord::normalize() {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (atom.kind == Atom::Kind::Exp) {
      if (atom.exponent.is_zero()) continue;
      if (!out.empty() && out.back().kind == Atom::Kind::Exp &&
          out.back().sym == atom.sym) {
        out.back().exponent += atom.exponent;
        if (out.back().exponent.is_zero()) out.pop_back();
        continue;
      }
    }
    out.push_back(atom);
  }
  atoms = std::move(out);
}

bool operator==(const GenWord& a, const GenWord& b) { return a.atoms == b.atoms; }

bool operator<(const GenWord& a, const GenWord& b) {
  if (a.atoms.size() != b.atoms.size()) return a.atoms.size() < b.atoms.size();
  for (size_t i = 0; i < a.atoms.size(); ++i) {
    if (!(a.atoms[i] == b.atoms[i]))
      return atom_less(a.atoms[i], b.atoms[i]);
  }
  return false;
}

GenWord word_mul(GenWord a, const GenWord& b) {
  a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
  a.normalize();
  return a;
}

SymElement SymElement::word(const GenWord& w, Jet c) {
  SymElement x;
  x.add_term(w, c);
  return x;
}

void SymElement::add_term(const GenWord& w, const Jet& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }

SymElement operator*(const Jet& c, const SymElement& x) {
  SymElement out;
  for (const auto& [w, cx] : x.terms) out.add_term(w, c * cx);
  return out;
}

SymElement sym_mul(const SymElement& x, const SymElement& y) {
  SymElement out;
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) out.add_term(word_mul(wx, wy), cx * cy);
  return out;
}

void SymTensor::add_term(const GenWord& l, const GenWord& r, const Jet& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(l, r);
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (const auto& [p, c] : o.terms) add_term(p.first, p.second, c);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  for (const auto& [p, c] : o.terms) add_term(p.first, p.second, -c);
  return *this;
}

SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }

SymTensor operator*(const Jet& c, const SymTensor& x) {
  SymTensor out;
  for (const auto& [p, cx] : x.terms) out.add_term(p.first, p.second, c * cx);
  return out;
}

SymTensor tensor_mul(const SymTensor& x, const SymTensor& y) {
  SymTensor out;
  for (const auto& [px, cx] : x.terms)
    for (const auto& [py, cy] : y.terms)
      out.add_term(word_mul(px.first, py.first), word_mul(px.second, py.second),
                   cx * cy);
  return out;
}

SymTensor tensor_of(const SymElement& l, const SymElement& r) {
  SymTensor out;
  for (const auto& [wl, cl] : l.terms)
    for (const auto& [wr, cr] : r.terms) out.add_term(wl, wr, cl * cr);
  return out;
}

SymTensor tensor_flip(const SymTensor& x) {
  SymTensor out;
  for (const auto& [p, c] : x.terms) out.add_term(p.second, p.first, c);
  return out;
}

bool is_primitive(const std::string& sym, const HopfData& data) {
  auto it = data.coproducts.find(sym);
  if (it == data.coproducts.end()) throw UnknownSymbol(sym);
  SymTensor prim;
  prim.add_term(GenWord::gen(sym), GenWord::one(), Jet(1.0));
  prim.add_term(GenWord::one(), GenWord::gen(sym), Jet(1.0));
  return (it->second - prim).is_zero();
}

namespace {

SymTensor coproduct_atom(const Atom& atom, const HopfData& data) {
  if (atom.kind == Atom::Kind::Gen) {
    auto it = data.coproducts.find(atom.sym);
    if (it == data.coproducts.end()) throw UnknownSymbol(atom.sym);
    return it->second;
  }
  if (!is_primitive(atom.sym, data))
    throw NonPrimitiveExponential("exp(" + atom.sym + ")");
  GenWord e = GenWord::exponential(atom.sym, atom.exponent);
  return SymTensor::of(e, e);
}

SymElement antipode_atom(const Atom& atom, const HopfData& data) {
  if (atom.kind == Atom::Kind::Gen) {
    auto it = data.antipodes.find(atom.sym);
    if (it == data.antipodes.end()) throw UnknownSymbol(atom.sym);
    return it->second;
  }
  return SymElement::word(GenWord::exponential(atom.sym, -atom.exponent));
}

// Dagger of an exponential base must be a plain unit-coefficient generator.
std::string dagger_base(const std::string& sym, const HopfData& data) {
  auto it = data.daggers.find(sym);
  if (it == data.daggers.end()) throw UnknownSymbol(sym);
  const SymElement& d = it->second;
  if (d.terms.size() != 1) throw NonPrimitiveExponential("dagger of exp base " + sym);
  const auto& [w, c] = *d.terms.begin();
  if (w.atoms.size() != 1 || w.atoms[0].kind != Atom::Kind::Gen || !(c == Jet(1.0)))
    throw NonPrimitiveExponential("dagger of exp base " + sym);
  return w.atoms[0].sym;
}

SymElement dagger_atom(const Atom& atom, const HopfData& data) {
  if (atom.kind == Atom::Kind::Gen) {
    auto it = data.daggers.find(atom.sym);
    if (it == data.daggers.end()) throw UnknownSymbol(atom.sym);
    return it->second;
  }
  return SymElement::word(
      GenWord::exponential(dagger_base(atom.sym, data), conj(atom.exponent)));
}

Operator evaluate_atom(const Atom& atom, const HopfData& data) {
  auto it = data.rep.find(atom.sym);
  if (it == data.rep.end()) throw UnknownSymbol(atom.sym);
  const Eigen::MatrixXcd& r = it->second;
  if (atom.kind == Atom::Kind::Gen) return lift(r);
  // exp((x0 + x1 eps) R) = exp(x0 R) + x1 eps R exp(x0 R); both orders commute.
  const Jet& e = atom.exponent;
  Eigen::MatrixXcd e0 = e.a0 == 0.0
                            ? Eigen::MatrixXcd::Identity(r.rows(), r.cols())
                            : Eigen::MatrixXcd((e.a0 * r).exp());
  Operator out(r.rows(), r.cols());
  Eigen::MatrixXcd e1 = e.a1 * (r * e0);
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      out(i, j) = Jet(e0(i, j), e1(i, j), e.tag);
  return out;
}

}  // namespace

SymTensor coproduct(const SymElement& x, const HopfData& data) {
  SymTensor out;
  for (const auto& [w, c] : x.terms) {
    SymTensor acc = SymTensor::unit();
    for (const auto& atom : w.atoms) acc = tensor_mul(acc, coproduct_atom(atom, data));
    out += c * acc;
  }
  return out;
}

SymElement antipode(const SymElement& x, const HopfData& data) {
  SymElement out;
  for (const auto& [w, c] : x.terms) {
    SymElement acc = SymElement::one();
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it)
      acc = sym_mul(acc, antipode_atom(*it, data));
    out += c * acc;
  }
  return out;
}

Jet counit(const SymElement& x, const HopfData& data) {
  Jet out(0.0);
  for (const auto& [w, c] : x.terms) {
    Jet acc(1.0);
    for (const auto& atom : w.atoms) {
      if (atom.kind == Atom::Kind::Exp) continue;  // group-like: eps = 1
      auto it = data.counits.find(atom.sym);
      if (it == data.counits.end()) throw UnknownSymbol(atom.sym);
      acc *= it->second;
    }
    out += c * acc;
  }
  return out;
}

SymElement dagger_of(const SymElement& x, const HopfData& data) {
  SymElement out;
  for (const auto& [w, c] : x.terms) {
    SymElement acc = SymElement::one();
    for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it)
      acc = sym_mul(acc, dagger_atom(*it, data));
    out += conj(c) * acc;
  }
  return out;
}

Operator evaluate_word(const GenWord& w, const HopfData& data) {
  Operator acc = jet_identity(data.dim);
  for (const auto& atom : w.atoms) acc = Operator(acc * evaluate_atom(atom, data));
  return acc;
}

Operator evaluate(const SymElement& x, const HopfData& data) {
  Operator out = Operator::Zero(data.dim, data.dim);
  for (const auto& [w, c] : x.terms) out += c * evaluate_word(w, data);
  return out;
}

Operator evaluate_tensor(const SymTensor& t, const HopfData& data) {
  const Eigen::Index d2 = data.dim * data.dim;
  Operator out = Operator::Zero(d2, d2);
  for (const auto& [p, c] : t.terms)
    out += c * kron(evaluate_word(p.first, data), evaluate_word(p.second, data));
  return out;
}

SymTensor antipode_leg(const SymTensor& t, int leg, const HopfData& data) {
  SymTensor out;
  for (const auto& [p, c] : t.terms) {
    SymElement s = antipode(SymElement::word(leg == 0 ? p.first : p.second), data);
    for (const auto& [ws, cs] : s.terms) {
      if (leg == 0)
        out.add_term(ws, p.second, c * cs);
      else
        out.add_term(p.first, ws, c * cs);
    }
  }
  return out;
}

SymElement tensor_contract(const SymTensor& t) {
  SymElement out;
  for (const auto& [p, c] : t.terms) out.add_term(word_mul(p.first, p.second), c);
  return out;
}

TensorElement tensor_terms(const SymTensor& t, const HopfData& data) {
  TensorElement out;
  out.terms.reserve(t.terms.size());
  for (const auto& [p, c] : t.terms)
    out.terms.push_back(
        {evaluate_word(p.first, data), evaluate_word(p.second, data), c});
  return out;
}

}  // namespace hopfevol
