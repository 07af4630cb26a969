#include "eulersum/const_ring.hpp"

#include "eulersum/bernoulli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace eulersum {

Atom zeta_atom(long s) {
    if (s < 2) throw std::invalid_argument("zeta_atom: argument must be >= 2 (zeta(1) is resolved at expression level)");
    return {AtomKind::ZETA, s};
}

Atom tbar_atom(long s) {
    if (s < 2) throw std::invalid_argument("tbar_atom: argument must be >= 2 (tbar(1) is resolved at expression level)");
    return {AtomKind::TBAR, s};
}

std::string atom_name(const Atom& a) {
    switch (a.kind) {
        case AtomKind::ZETA: return "z(" + std::to_string(a.arg) + ")";
        case AtomKind::TBAR: return "tb(" + std::to_string(a.arg) + ")";
        case AtomKind::LN2: return "ln2";
        case AtomKind::PI: return "pi";
        case AtomKind::LI4HALF: return "li4half";
        case AtomKind::AZETA51: return "zb51";
        case AtomKind::AZETA71: return "zb71";
        case AtomKind::ZETA62: return "z62";
    }
    throw std::logic_error("atom_name: bad kind");
}

Atom atom_from_name(const std::string& name) {
    if (name == "ln2") return ln2_atom();
    if (name == "pi") return pi_atom();
    if (name == "li4half") return li4half_atom();
    if (name == "zb51") return azeta51_atom();
    if (name == "zb71") return azeta71_atom();
    if (name == "z62") return zeta62_atom();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string head = name.substr(0, paren);
        long s = std::stol(name.substr(paren + 1, name.size() - paren - 2));
        if (head == "z") return zeta_atom(s);
        if (head == "tb") return tbar_atom(s);
    }
    throw std::invalid_argument("atom_from_name: unknown atom '" + name + "'");
}

long atom_weight(const Atom& a) {
    switch (a.kind) {
        case AtomKind::ZETA:
        case AtomKind::TBAR: return a.arg;
        case AtomKind::LN2:
        case AtomKind::PI: return 1;
        case AtomKind::LI4HALF: return 4;
        case AtomKind::AZETA51: return 6;
        case AtomKind::AZETA71:
        case AtomKind::ZETA62: return 8;
    }
    throw std::logic_error("atom_weight: bad kind");
}

Monomial Monomial::single(const Atom& a, long exp) {
    if (exp <= 0) throw std::invalid_argument("Monomial::single: exponent must be positive");
    Monomial m;
    m.factors.emplace_back(a, exp);
    return m;
}

long Monomial::weight() const {
    long w = 0;
    for (const auto& [a, e] : factors) w += atom_weight(a) * e;
    return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
            r.factors.push_back(*ia++);
        } else if (ia == a.factors.end() || ib->first < ia->first) {
            r.factors.push_back(*ib++);
        } else {
            r.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

void ConstExpr::add_term(const Monomial& m, const BigRational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ConstExpr& ConstExpr::operator+=(const ConstExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ConstExpr& ConstExpr::operator-=(const ConstExpr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
    ConstExpr r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ConstExpr operator*(const BigRational& s, const ConstExpr& a) {
    ConstExpr r;
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
}

long ConstExpr::uniform_weight() const {
    if (terms_.empty()) return 0;
    long w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return -1;
    return w;
}

std::string ConstExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        BigRational a = neg ? BigRational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (m.is_one()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            bool fa = true;
            for (const auto& [atom, exp] : m.factors) {
                if (!fa) out << "*";
                fa = false;
                out << atom_name(atom);
                if (exp > 1) out << "^" << exp;
            }
        }
    }
    return out.str();
}

nlohmann::ordered_json ConstExpr::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::ordered_json mono = nlohmann::ordered_json::array();
        for (const auto& [atom, exp] : m.factors) {
            mono.push_back(nlohmann::ordered_json::array({atom_name(atom), exp}));
        }
        arr.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
    }
    return arr;
}

ConstExpr ConstExpr::from_json(const nlohmann::ordered_json& j) {
    ConstExpr e;
    for (const auto& term : j) {
        Monomial m;
        for (const auto& f : term.at("monomial")) {
            Atom a = atom_from_name(f.at(0).get<std::string>());
            m = m * Monomial::single(a, f.at(1).get<long>());
        }
        e.add_term(m, rational_from_string(term.at("coeff").get<std::string>()));
    }
    return e;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    std::string read_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("ConstExpr parse: expected digits at pos " + std::to_string(i));
        return s.substr(start, i - start);
    }

    std::string read_ident() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
        if (start == i) throw std::invalid_argument("ConstExpr parse: expected name at pos " + std::to_string(i));
        return s.substr(start, i - start);
    }

    // coeff := digits [ '/' digits ]
    BigRational parse_coeff() {
        std::string num = read_number();
        if (consume('/')) return rational_from_string(num + "/" + read_number());
        return rational_from_string(num);
    }

    // factor := atom [ '^' digits ]
    std::pair<Atom, long> parse_factor() {
        std::string name = read_ident();
        if (consume('(')) {
            name += "(" + read_number() + ")";
            if (!consume(')')) throw std::invalid_argument("ConstExpr parse: missing ')'");
        }
        long exp = 1;
        if (consume('^')) exp = std::stol(read_number());
        return {atom_from_name(name), exp};
    }

    // term := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
    void parse_term(ConstExpr& e, bool negative) {
        BigRational coeff(1);
        Monomial mono;
        bool have_coeff = std::isdigit(static_cast<unsigned char>(peek()));
        if (have_coeff) coeff = parse_coeff();
        bool expect_factor = !have_coeff;
        if (have_coeff && consume('*')) expect_factor = true;
        if (expect_factor) {
            auto [a, exp] = parse_factor();
            mono = mono * Monomial::single(a, exp);
            while (consume('*')) {
                auto [a2, e2] = parse_factor();
                mono = mono * Monomial::single(a2, e2);
            }
        }
        e.add_term(mono, negative ? BigRational(-coeff) : coeff);
    }
};

}  // namespace

ConstExpr ConstExpr::from_string(const std::string& str) {
    Parser p(str);
    ConstExpr e;
    if (p.eof()) throw std::invalid_argument("ConstExpr parse: empty input");
    {
        // allow a bare "0"
        size_t save = p.i;
        if (p.peek() == '0') {
            ++p.i;
            if (p.eof()) return e;
            p.i = save;
        }
    }
    bool neg = p.consume('-');
    if (!neg) p.consume('+');
    p.parse_term(e, neg);
    while (!p.eof()) {
        if (p.consume('+')) {
            p.parse_term(e, false);
        } else if (p.consume('-')) {
            p.parse_term(e, true);
        } else {
            throw std::invalid_argument("ConstExpr parse: expected '+' or '-' at pos " + std::to_string(p.i));
        }
    }
    return e;
}

ConstExpr ce_zeta(long s) {
    if (s < 1) throw std::invalid_argument("ce_zeta: argument must be >= 1");
    if (s == 1) return BigRational(-2) * ConstExpr::atom(ln2_atom());
    return ConstExpr::atom(zeta_atom(s));
}

ConstExpr ce_tbar(long s) {
    if (s < 1) throw std::invalid_argument("ce_tbar: argument must be >= 1");
    if (s == 1) return ConstExpr{};
    return ConstExpr::atom(tbar_atom(s));
}

ConstExpr ce_ln2() { return ConstExpr::atom(ln2_atom()); }

ConstExpr ce_pi_pow(long k) {
    if (k < 0) throw std::invalid_argument("ce_pi_pow: negative power");
    if (k == 0) return ConstExpr(BigRational(1));
    ConstExpr e;
    e.add_term(Monomial::single(pi_atom(), k), BigRational(1));
    return e;
}

namespace {

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
BigRational zeta_even_pi_coeff(long s) {
    long k = s / 2;
    BigRational c = bernoulli(2 * k) * BigRational(pow2z(2 * k)) / (BigRational(2) * BigRational(factorial(2 * k)));
    return sign_pow(k + 1) > 0 ? c : BigRational(-c);
}

}  // namespace

ConstExpr normalize(const ConstExpr& e, NormalizeMode mode) {
    ConstExpr out;
    for (const auto& [m, c] : e.terms()) {
        ConstExpr term(c);
        for (const auto& [atom, exp] : m.factors) {
            ConstExpr base;
            if (atom.kind == AtomKind::TBAR) {
                BigRational f = BigRational(pow2z(atom.arg)) - 1;
                if (mode == NormalizeMode::pi_form && atom.arg % 2 == 0) {
                    base = (f * zeta_even_pi_coeff(atom.arg)) * ce_pi_pow(atom.arg);
                } else {
                    base = f * ConstExpr::atom(zeta_atom(atom.arg));
                }
            } else if (atom.kind == AtomKind::ZETA && mode == NormalizeMode::pi_form &&
                       atom.arg % 2 == 0) {
                base = zeta_even_pi_coeff(atom.arg) * ce_pi_pow(atom.arg);
            } else {
                base = ConstExpr::atom(atom);
            }
            for (long t = 0; t < exp; ++t) term = term * base;
        }
        out += term;
    }
    return out;
}

}  // namespace eulersum
