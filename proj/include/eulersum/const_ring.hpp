#pragma once

#include "eulersum/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace eulersum {

// Formal constant atoms. ZETA/TBAR are only constructible with argument >= 2:
// the conventions zeta(1) = -2 ln 2 and tbar(1) = 0 are applied when building
// expressions, so no argument-1 atom can exist.
enum class AtomKind : int {
    ZETA = 0,   // z(s), s >= 2
    TBAR = 1,   // tb(s) = (2^s - 1) z(s), s >= 2
    LN2 = 2,    // ln 2
    PI = 3,     // pi (powers live in the monomial)
    LI4HALF = 4,  // Li_4(1/2)
    AZETA51 = 5,  // alternating double zeta, weight 6: sum_{n>k>=1} (-1)^n / (n^5 k)
    AZETA71 = 6,  // alternating double zeta, weight 8: sum_{n>k>=1} (-1)^n / (n^7 k)
    ZETA62 = 7,   // double zeta, weight 8: sum_{n>k>=1} 1 / (n^6 k^2)
};

struct Atom {
    AtomKind kind;
    long arg = 0;  // s for ZETA/TBAR, unused otherwise

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

Atom zeta_atom(long s);   // requires s >= 2
Atom tbar_atom(long s);   // requires s >= 2
inline Atom ln2_atom() { return {AtomKind::LN2, 0}; }
inline Atom pi_atom() { return {AtomKind::PI, 0}; }
inline Atom li4half_atom() { return {AtomKind::LI4HALF, 0}; }
inline Atom azeta51_atom() { return {AtomKind::AZETA51, 0}; }
inline Atom azeta71_atom() { return {AtomKind::AZETA71, 0}; }
inline Atom zeta62_atom() { return {AtomKind::ZETA62, 0}; }

// "z(3)", "tb(4)", "ln2", "pi", "li4half", "zb51", "zb71", "z62"
std::string atom_name(const Atom& a);
Atom atom_from_name(const std::string& name);
long atom_weight(const Atom& a);

// Product of atoms with positive exponents, kept sorted by (kind, arg).
struct Monomial {
    std::vector<std::pair<Atom, long>> factors;

    static Monomial one() { return {}; }
    static Monomial single(const Atom& a, long exp = 1);
    bool is_one() const { return factors.empty(); }
    long weight() const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class NormalizeMode { raw, pi_form };

// Finite Q-linear combination of monomials. Immutable-by-convention value
// type; no zero coefficients are stored.
class ConstExpr {
  public:
    ConstExpr() = default;
    explicit ConstExpr(const BigRational& c) { add_term(Monomial::one(), c); }

    static ConstExpr atom(const Atom& a, const BigRational& coeff = BigRational(1)) {
        ConstExpr e;
        e.add_term(Monomial::single(a), coeff);
        return e;
    }

    const std::map<Monomial, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ConstExpr& operator+=(const ConstExpr& o);
    ConstExpr& operator-=(const ConstExpr& o);
    friend ConstExpr operator+(ConstExpr a, const ConstExpr& b) { return a += b; }
    friend ConstExpr operator-(ConstExpr a, const ConstExpr& b) { return a -= b; }
    friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
    friend ConstExpr operator*(const BigRational& s, const ConstExpr& a);
    friend ConstExpr operator-(const ConstExpr& a) { return BigRational(-1) * a; }
    friend bool operator==(const ConstExpr& a, const ConstExpr& b) { return a.terms_ == b.terms_; }

    // Total weight if every monomial has the same one, otherwise -1; zero -> 0.
    long uniform_weight() const;

    std::string to_string() const;
    nlohmann::ordered_json to_json() const;
    static ConstExpr from_string(const std::string& s);
    static ConstExpr from_json(const nlohmann::ordered_json& j);

    void add_term(const Monomial& m, const BigRational& c);

  private:
    std::map<Monomial, BigRational> terms_;
};

// zeta(s) with the convention zeta(1) = -2 ln 2.
ConstExpr ce_zeta(long s);
// tbar(s) with the convention tbar(1) = 0.
ConstExpr ce_tbar(long s);
ConstExpr ce_ln2();
ConstExpr ce_pi_pow(long k);

// raw: rewrite tb(s) -> (2^s - 1) z(s).
// pi_form: additionally rewrite z(2k) -> (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!) as pi powers.
ConstExpr normalize(const ConstExpr& e, NormalizeMode mode);

}  // namespace eulersum
