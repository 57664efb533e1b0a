#pragma once

// Expression language for the command line: factors u(name,m,d) and
// ut(name,m,d,k) joined by '*', segments [a..b]@name, multisegments {...},
// rationals p/q, and model descriptors. Printing is canonical and parsing
// inverts it exactly; whitespace between tokens is permitted on input.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "arthur.hpp"
#include "models.hpp"
#include "segments.hpp"
#include "speh.hpp"

namespace branchlaw::text {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps line names to symbols. Undeclared names default to rank 1; the name
// "1" is the self-dual trivial-character line, a trailing '^' marks the
// partner of the name without it, and anything else partners with name+"^".
class SymbolTable {
public:
    SymbolTable() { table_.emplace("1", CuspidalSymbol("1", 1)); }

    void declare(const std::string& name, int rank, bool self_dual) {
        if (name.empty() || name == "u" || name == "ut")
            throw ParseError("reserved or empty line name: '" + name + "'");
        if (rank < 1) throw ParseError("line rank must be positive");
        const CuspidalSymbol sym = self_dual ? CuspidalSymbol(name, rank)
                                             : CuspidalSymbol(name, rank, partner_name(name));
        auto [it, inserted] = table_.emplace(name, sym);
        if (!inserted) it->second = sym;
        if (!self_dual) {
            const CuspidalSymbol mirror = sym.dual();
            auto [jt, fresh] = table_.emplace(mirror.name, mirror);
            if (!fresh) jt->second = mirror;
        }
    }

    // Accepts "NAME=RANK", "NAME=RANK,sd", and the spelled-out form
    // "decl NAME RANK [sd]".
    void apply_decl(const std::string& spec) {
        std::string s = spec;
        if (s.rfind("decl ", 0) == 0) {
            s = s.substr(5);
            for (char& c : s)
                if (c == ' ' || c == '\t') c = '=';
            // collapse runs of '=' so "decl a  2" still splits cleanly
            std::string t;
            for (char c : s)
                if (c != '=' || t.empty() || t.back() != '=') t += c;
            s = t;
            auto last = s.find_last_of('=');
            if (last != std::string::npos && s.substr(last + 1) == "sd")
                s = s.substr(0, last) + ",sd";
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("declaration must look like NAME=RANK[,sd]: '" + spec + "'");
        const std::string name = s.substr(0, eq);
        std::string rest = s.substr(eq + 1);
        bool self_dual = false;
        if (rest.size() >= 3 && rest.substr(rest.size() - 3) == ",sd") {
            self_dual = true;
            rest = rest.substr(0, rest.size() - 3);
        }
        int rank = 0;
        try {
            std::size_t used = 0;
            rank = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError("bad rank in declaration: '" + spec + "'");
        }
        declare(name, rank, self_dual);
    }

    CuspidalSymbol lookup(const std::string& name) const {
        const auto it = table_.find(name);
        if (it != table_.end()) return it->second;
        if (name.empty() || name == "u" || name == "ut")
            throw ParseError("reserved or empty line name: '" + name + "'");
        return CuspidalSymbol(name, 1, partner_name(name));
    }

private:
    static std::string partner_name(const std::string& name) {
        if (name.size() > 1 && name.back() == '^') return name.substr(0, name.size() - 1);
        return name + "^";
    }

    std::map<std::string, CuspidalSymbol> table_;
};

namespace detail {

inline bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '^';
}

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        return s_[pos_];
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool try_consume_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        // a word must not run into further name characters
        if (pos_ + w.size() < s_.size() && name_char(s_[pos_ + w.size()])) return false;
        pos_ += w.size();
        return true;
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected a line name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-'))
            fail("expected an integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    Rat rational() {
        const std::int64_t num = integer();
        std::size_t mark = pos_;
        if (try_consume('/')) {
            // reject "1 / 2": the slash must be adjacent in a rational literal
            if (mark != pos_ - 1) {
                pos_ = mark;
                return Rat(num);
            }
            return Rat(num, integer());
        }
        return Rat(num);
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

inline SpehRep factor(Cursor& c, const SymbolTable& symbols) {
    const bool extended = c.try_consume_word("ut");
    if (!extended && !c.try_consume_word("u")) c.fail("expected a factor u(...) or ut(...)");
    c.expect('(');
    const std::string line = c.name();
    c.expect(',');
    const std::int64_t m = c.integer();
    c.expect(',');
    const std::int64_t d = c.integer();
    std::int64_t k = 0;
    if (extended) {
        c.expect(',');
        k = c.integer();
    }
    c.expect(')');
    Rat twist(0);
    if (c.try_consume('@')) twist = c.rational();
    if (m < 1 || d < 1 || k < 0 || m > 1'000'000 || d > 1'000'000 || k > 1'000'000)
        c.fail("factor parameters out of range");
    return SpehRep(symbols.lookup(line), static_cast<int>(m), static_cast<int>(d),
                   static_cast<int>(k), twist);
}

inline Segment segment(Cursor& c, const SymbolTable& symbols) {
    c.expect('[');
    const Rat a = c.rational();
    c.expect('.');
    c.expect('.');
    const Rat b = c.rational();
    c.expect(']');
    c.expect('@');
    const std::string line = c.name();
    if (!(b - a).is_integer() || b < a) c.fail("segment endpoints must differ by a natural number");
    return Segment(symbols.lookup(line), a, b);
}

}  // namespace detail

inline Rat parse_rational(std::string_view s) {
    detail::Cursor c(s);
    const Rat r = c.rational();
    if (!c.done()) c.fail("trailing characters");
    return r;
}

inline Segment parse_segment(std::string_view s, const SymbolTable& symbols = {}) {
    detail::Cursor c(s);
    const Segment seg = detail::segment(c, symbols);
    if (!c.done()) c.fail("trailing characters");
    return seg;
}

inline Multisegment parse_multisegment(std::string_view s,
                                       const SymbolTable& symbols = {}) {
    detail::Cursor c(s);
    Multisegment ms;
    c.expect('{');
    if (!c.try_consume('}')) {
        do {
            ms.add(detail::segment(c, symbols));
        } while (c.try_consume(','));
        c.expect('}');
    }
    if (!c.done()) c.fail("trailing characters");
    return ms;
}

// A single factor, possibly essentially Speh (ut form). Products reject the
// ut form because Arthur-type representations are unitary.
inline SpehRep parse_factor(std::string_view s, const SymbolTable& symbols = {}) {
    detail::Cursor c(s);
    SpehRep u = detail::factor(c, symbols);
    if (!c.done()) c.fail("trailing characters");
    return u;
}

// A product of factors; the empty (all-whitespace) string is the empty
// representation of the trivial group.
inline ArthurTypeRep parse_rep(std::string_view s, const SymbolTable& symbols = {}) {
    detail::Cursor c(s);
    ArthurTypeRep x;
    if (c.done()) return x;
    do {
        try {
            x.add(detail::factor(c, symbols));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    } while (c.try_consume('*'));
    if (!c.done()) c.fail("trailing characters");
    return x;
}

inline models::ModelSpec parse_model(std::string_view s) {
    using models::ModelKind;
    using models::ModelSpec;
    detail::Cursor c(s);
    ModelSpec spec;
    auto params = [&](int count) {
        c.expect(':');
        std::int64_t v[3] = {0, 0, 0};
        for (int i = 0; i < count; ++i) {
            if (i > 0) c.expect(',');
            v[i] = c.integer();
        }
        if (count == 2) {
            spec.m2 = static_cast<int>(v[0]);
            spec.r = static_cast<int>(v[1]);
        } else {
            spec.m1 = static_cast<int>(v[0]);
            spec.m2 = static_cast<int>(v[1]);
            spec.r = static_cast<int>(v[2]);
        }
    };
    if (c.try_consume_word("basic")) {
        spec.kind = ModelKind::Basic;
    } else if (c.try_consume_word("bessel")) {
        spec.kind = ModelKind::Bessel;
        params(3);
    } else if (c.try_consume_word("fj")) {
        spec.kind = ModelKind::FourierJacobi;
        params(3);
    } else if (c.try_consume_word("rs")) {
        spec.kind = ModelKind::RankinSelberg;
        params(2);
    } else if (c.try_consume_word("eqfj")) {
        spec.kind = ModelKind::EqualRankFJ;
    } else {
        c.fail("unknown model (want basic, bessel:m1,m2,r, fj:m1,m2,r, rs:m,r, eqfj)");
    }
    if (!c.done()) c.fail("trailing characters");
    return spec;
}

inline std::string print(const Rat& r) { return to_string(r); }

inline std::string print(const Segment& s) {
    return "[" + to_string(s.a) + ".." + to_string(s.b) + "]@" + s.base.name;
}

inline std::string print(const Multisegment& ms) {
    std::string out = "{";
    bool first = true;
    for (const Segment& s : ms) {
        if (!first) out += ",";
        out += print(s);
        first = false;
    }
    return out + "}";
}

inline std::string print(const SpehRep& u) {
    std::string out = u.k == 0 ? "u(" : "ut(";
    out += u.rho.name + "," + std::to_string(u.m) + "," + std::to_string(u.d);
    if (u.k != 0) out += "," + std::to_string(u.k);
    out += ")";
    if (u.twist != Rat(0)) out += "@" + to_string(u.twist);
    return out;
}

inline std::string print(const ArthurTypeRep& x) {
    std::string out;
    bool first = true;
    for (const SpehRep& f : x) {
        if (!first) out += "*";
        out += print(f);
        first = false;
    }
    return out;
}

inline std::string print(const models::ModelSpec& m) {
    using models::ModelKind;
    switch (m.kind) {
        case ModelKind::Basic: return "basic";
        case ModelKind::Bessel:
            return "bessel:" + std::to_string(m.m1) + "," + std::to_string(m.m2) + "," +
                   std::to_string(m.r);
        case ModelKind::FourierJacobi:
            return "fj:" + std::to_string(m.m1) + "," + std::to_string(m.m2) + "," +
                   std::to_string(m.r);
        case ModelKind::RankinSelberg:
            return "rs:" + std::to_string(m.m2) + "," + std::to_string(m.r);
        default: return "eqfj";
    }
}

}  // namespace branchlaw::text
