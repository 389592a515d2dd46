#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfevol/opalg.hpp"

namespace hopfevol {

/// Word atom: either a generator symbol or a group-like exponential
/// exp(exponent * base) of a primitive generator.
struct Atom {
  enum class Kind { Gen, Exp };
  Kind kind = Kind::Gen;
  std::string sym;
  Jet exponent;  // exponentials only

  static Atom gen(std::string s) { return Atom{Kind::Gen, std::move(s), Jet()}; }
  static Atom exponential(std::string base, Jet e) {
    return Atom{Kind::Exp, std::move(base), e};
  }
};

bool operator==(const Atom& a, const Atom& b);
bool atom_less(const Atom& a, const Atom& b);

/// Free word of atoms.  Adjacent exponentials with the same base merge by
/// adding exponents; an exponential with zero exponent is dropped.  The
/// empty word is the unit.
struct GenWord {
  std::vector<Atom> atoms;

  static GenWord one() { return GenWord{}; }
  static GenWord gen(const std::string& s) { return GenWord{{Atom::gen(s)}}; }
  static GenWord exponential(const std::string& base, Jet e) {
    GenWord w{{Atom::exponential(base, e)}};
    w.normalize();
    return w;
  }

  bool is_one() const { return atoms.empty(); }
  void normalize();
};

bool operator==(const GenWord& a, const GenWord& b);
bool operator<(const GenWord& a, const GenWord& b);

GenWord word_mul(GenWord a, const GenWord& b);

/// Finite Jet-linear combination of words.
struct SymElement {
  std::map<GenWord, Jet> terms;

  static SymElement zero() { return {}; }
  static SymElement one(Jet c = Jet(1.0)) { return word(GenWord::one(), c); }
  static SymElement gen(const std::string& s, Jet c = Jet(1.0)) {
    return word(GenWord::gen(s), c);
  }
  static SymElement word(const GenWord& w, Jet c = Jet(1.0));

  void add_term(const GenWord& w, const Jet& c);
  bool is_zero() const { return terms.empty(); }

  SymElement& operator+=(const SymElement& o);
  SymElement& operator-=(const SymElement& o);
};

SymElement operator+(SymElement a, const SymElement& b);
SymElement operator-(SymElement a, const SymElement& b);
SymElement operator*(const Jet& c, const SymElement& x);
SymElement sym_mul(const SymElement& x, const SymElement& y);

/// Finite Jet-linear combination of word pairs (Sweedler form).
struct SymTensor {
  std::map<std::pair<GenWord, GenWord>, Jet> terms;

  static SymTensor unit() {
    SymTensor t;
    t.add_term(GenWord::one(), GenWord::one(), Jet(1.0));
    return t;
  }
  static SymTensor of(const GenWord& l, const GenWord& r, Jet c = Jet(1.0)) {
    SymTensor t;
    t.add_term(l, r, c);
    return t;
  }

  void add_term(const GenWord& l, const GenWord& r, const Jet& c);
  bool is_zero() const { return terms.empty(); }

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
};

SymTensor operator+(SymTensor a, const SymTensor& b);
SymTensor operator-(SymTensor a, const SymTensor& b);
SymTensor operator*(const Jet& c, const SymTensor& x);
SymTensor tensor_mul(const SymTensor& x, const SymTensor& y);
SymTensor tensor_of(const SymElement& l, const SymElement& r);
/// tau: swap the two legs.
SymTensor tensor_flip(const SymTensor& x);

/// Per-generator Hopf structure data plus a matrix representation.
struct HopfData {
  Eigen::Index dim = 0;
  Param param = Param::None;
  std::vector<std::string> symbols;
  std::map<std::string, SymTensor> coproducts;
  std::map<std::string, SymElement> antipodes;
  std::map<std::string, Jet> counits;
  std::map<std::string, SymElement> daggers;
  std::map<std::string, Eigen::MatrixXcd> rep;

  /// Declared commutation relations [a, b] = rhs, used by audits.
  struct Relation {
    std::string a, b;
    SymElement rhs;
  };
  std::vector<Relation> relations;

  bool has_symbol(const std::string& s) const { return rep.count(s) != 0; }
};

/// True iff the declared coproduct of `sym` is exactly X(x)1 + 1(x)X.
bool is_primitive(const std::string& sym, const HopfData& data);

/// Homomorphic extension of the per-generator coproducts; exponential atoms
/// must sit on primitive generators and map to exp(x)exp.
SymTensor coproduct(const SymElement& x, const HopfData& data);

/// Anti-homomorphic extension of the per-generator antipodes;
/// S(exp(aK)) = exp(-aK).
SymElement antipode(const SymElement& x, const HopfData& data);

/// Multiplicative extension of the per-generator counits; eps(exp) = 1.
Jet counit(const SymElement& x, const HopfData& data);

/// Antilinear involution from the declared dagger pairing.
SymElement dagger_of(const SymElement& x, const HopfData& data);

Operator evaluate_word(const GenWord& w, const HopfData& data);
Operator evaluate(const SymElement& x, const HopfData& data);

/// Evaluate a tensor on the d^2-dimensional tensor-square representation.
Operator evaluate_tensor(const SymTensor& t, const HopfData& data);

/// Apply the antipode to one leg (0 = left, 1 = right).
SymTensor antipode_leg(const SymTensor& t, int leg, const HopfData& data);

/// Multiplication map m: A(x)B -> AB.
SymElement tensor_contract(const SymTensor& t);

/// Evaluate both legs of each term, yielding a Sweedler sum of operators.
TensorElement tensor_terms(const SymTensor& t, const HopfData& data);

}  // namespace hopfevol
