#pragma once

// Text format for Lie algebras given by their structure equations: a
// parenthesized, comma-separated list with one expression per basis covector,
// each expression the differential of that covector.  Example:
//
//   # name: product of two rotation algebras
//   (-f25, f15, -f46, f36, 0, 0)
//
// Terms are `coefficient*basis` with the coefficient optional; basis factors
// are `fij`/`eij` with single-digit indices, or `[i,j]` with arbitrary
// indices (mandatory in dimension ten and above, where the two-letter
// shorthand would be ambiguous).  Lines starting with `#` before the list
// carry optional metadata (`# name: ...`, `# param key = value`) or comments.

#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermlie/liealg.hpp"

namespace hermlie {

/// Parse failure with the byte offset of the offending character.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& message)
        : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// A parsed structure-equation document.  differentials[k-1] holds the
/// 2-form d e^k; metadata is optional and round-trips through serialization.
struct DslDocument {
    int dimension = 0;
    std::vector<KForm> differentials;
    std::optional<std::string> name;
    std::vector<std::pair<std::string, Scalar>> parameters;

    friend bool operator==(const DslDocument&, const DslDocument&) = default;
};

namespace detail {

class DslParser {
  public:
    explicit DslParser(const std::string& text) : s_(text) {}

    DslDocument parse() {
        DslDocument doc;
        parse_headers(doc);
        skip_ws();
        expect('(', "expected '(' opening the structure-equation list");
        std::vector<std::vector<RawTerm>> exprs;
        while (true) {
            exprs.push_back(parse_expression());
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect(')', "expected ',' or ')' in the structure-equation list");
            break;
        }
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error(pos_, "unexpected text after the closing parenthesis");

        const int n = static_cast<int>(exprs.size());
        doc.dimension = n;
        for (const auto& expr : exprs) {
            KForm d(n, 2);
            for (const RawTerm& t : expr) {
                if (!t.bracketed && n >= 10)
                    throw parse_error(t.basis_pos,
                                      "two-letter basis shorthand is ambiguous in dimension " +
                                          std::to_string(n) + "; use bracketed indices [i,j]");
                if (t.i < 1 || t.i > n || t.j < 1 || t.j > n)
                    throw parse_error(t.basis_pos, "basis index out of range for dimension " +
                                                       std::to_string(n));
                d.add_term({t.i, t.j}, t.coefficient);
            }
            doc.differentials.push_back(std::move(d));
        }
        return doc;
    }

  private:
    struct RawTerm {
        int i, j;
        Scalar coefficient;
        bool bracketed;
        std::size_t basis_pos;
    };

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c, const std::string& message) {
        if (pos_ >= s_.size() || s_[pos_] != c) throw parse_error(pos_, message);
        ++pos_;
    }

    static std::string trim(const std::string& text) {
        std::size_t a = 0, b = text.size();
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        return text.substr(a, b - a);
    }

    void parse_headers(DslDocument& doc) {
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '#') return;
            const std::size_t line_start = pos_++;
            std::size_t eol = s_.find('\n', pos_);
            if (eol == std::string::npos) eol = s_.size();
            const std::string line = trim(s_.substr(pos_, eol - pos_));
            pos_ = eol;
            if (line.rfind("name:", 0) == 0) {
                doc.name = trim(line.substr(5));
            } else if (line.rfind("param ", 0) == 0) {
                const std::string body = trim(line.substr(6));
                const std::size_t eq = body.find('=');
                if (eq == std::string::npos)
                    throw parse_error(line_start, "malformed parameter line; expected 'param key = value'");
                const std::string key = trim(body.substr(0, eq));
                const std::string value = trim(body.substr(eq + 1));
                if (key.empty())
                    throw parse_error(line_start, "malformed parameter line; empty parameter name");
                try {
                    doc.parameters.emplace_back(key, parse_scalar(value));
                } catch (const std::domain_error& err) {
                    throw parse_error(line_start, std::string("bad parameter value: ") + err.what());
                }
            }
            // Any other '#' line is a comment.
        }
    }

    std::vector<RawTerm> parse_expression() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '0') {
            const std::size_t zero_pos = pos_++;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != ',' && s_[pos_] != ')'))
                throw parse_error(zero_pos, "a zero expression must stand alone");
            return terms;
        }
        int sign = 1;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            sign = -1;
        }
        while (true) {
            terms.push_back(parse_term(sign));
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '+') {
                ++pos_;
                sign = 1;
                continue;
            }
            if (pos_ < s_.size() && s_[pos_] == '-') {
                ++pos_;
                sign = -1;
                continue;
            }
            return terms;
        }
    }

    RawTerm parse_term(int sign) {
        skip_ws();
        const std::size_t term_start = pos_;
        // The basis factor begins at the first 'f', 'e', or '['; coefficient
        // literals (digits, '/', '*', 'sqrt(d)') contain none of those.  The
        // parentheses of sqrt(d) are skipped by depth so its ')' does not read
        // as the end of the expression list.
        std::size_t basis = pos_;
        int depth = 0;
        while (basis < s_.size()) {
            const char c = s_[basis];
            if (c == '(') ++depth;
            if (c == ')' && depth > 0) {
                --depth;
                ++basis;
                continue;
            }
            if (c == 'f' || c == 'e' || c == '[' || c == ',' || c == ')' || c == '+' || c == '-')
                break;
            ++basis;
        }
        if (basis >= s_.size() || (s_[basis] != 'f' && s_[basis] != 'e' && s_[basis] != '['))
            throw parse_error(term_start,
                              "expected a basis factor ('f'/'e' with two indices, or [i,j])");

        Scalar coeff(1);
        std::string coeff_text = trim(s_.substr(pos_, basis - pos_));
        if (!coeff_text.empty()) {
            if (coeff_text.back() != '*')
                throw parse_error(term_start, "expected '*' between the coefficient and the basis factor");
            coeff_text = trim(coeff_text.substr(0, coeff_text.size() - 1));
            if (coeff_text.empty())
                throw parse_error(term_start, "expected a coefficient before '*'");
            try {
                coeff = parse_scalar(coeff_text);
            } catch (const std::domain_error& err) {
                throw parse_error(term_start, std::string("bad coefficient: ") + err.what());
            }
        }
        pos_ = basis;
        auto [i, j, bracketed] = parse_basis();
        return RawTerm{i, j, Scalar(sign) * coeff, bracketed, basis};
    }

    std::tuple<int, int, bool> parse_basis() {
        const std::size_t basis_pos = pos_;
        if (s_[pos_] == '[') {
            ++pos_;
            const int i = parse_index();
            skip_ws();
            expect(',', "expected ',' between bracketed indices");
            const int j = parse_index();
            skip_ws();
            expect(']', "expected ']' closing the index pair");
            if (i == j) throw parse_error(basis_pos, "repeated index in a basis factor");
            return {i, j, true};
        }
        ++pos_;  // the 'f' or 'e'
        std::size_t digits = pos_;
        while (digits < s_.size() && std::isdigit(static_cast<unsigned char>(s_[digits]))) ++digits;
        const std::size_t count = digits - pos_;
        if (count < 2)
            throw parse_error(basis_pos, "expected two single-digit indices after the basis letter");
        if (count > 2)
            throw parse_error(basis_pos,
                              "ambiguous multi-digit indices; use bracketed [i,j] form");
        const int i = s_[pos_] - '0';
        const int j = s_[pos_ + 1] - '0';
        pos_ = digits;
        if (i >= j)
            throw parse_error(basis_pos, "letter-form indices must be ascending");
        return {i, j, false};
    }

    int parse_index() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw parse_error(start, "expected a basis index");
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 4) throw parse_error(start, "basis index out of range");
        return std::stoi(digits);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline DslDocument parse_document(const std::string& text) {
    return detail::DslParser(text).parse();
}

/// The algebra with the document's structure equations: the coefficient of
/// e^{ij} in d e^k is minus the e_k-component of [e_i, e_j].
inline LieAlgebra document_to_algebra(const DslDocument& doc) {
    const int n = doc.dimension;
    LieAlgebra g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vector v(n);
            for (int k = 1; k <= n; ++k) v[k - 1] = -doc.differentials[k - 1].coefficient({i, j});
            if (!v.is_zero()) g.set_bracket(i, j, v);
        }
    if (auto bad = g.jacobi_check())
        throw construction_error("JACOBI_FAILURE",
                                 "the structure constants violate the Jacobi identity on the basis "
                                 "triple (" +
                                     std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                                     "," + std::to_string((*bad)[2]) + ")");
    return g;
}

inline LieAlgebra parse_structure(const std::string& text) {
    return document_to_algebra(parse_document(text));
}

inline DslDocument algebra_to_document(const LieAlgebra& g) {
    DslDocument doc;
    doc.dimension = g.dim();
    for (int k = 1; k <= g.dim(); ++k)
        doc.differentials.push_back(g.differential_of_basis_covector(k));
    return doc;
}

namespace detail {

/// One canonical piece per field component: a mixed coefficient a + b*sqrt(d)
/// is emitted as two terms, since term coefficients in the grammar are a
/// single rational or a rational multiple of sqrt(d).
inline void append_pieces(const IndexTuple& t, const Scalar& c,
                          std::vector<std::pair<IndexTuple, Scalar>>& out) {
    if (c.is_rational() || c.rational_part() == 0) {
        out.emplace_back(t, c);
        return;
    }
    out.emplace_back(t, Scalar(c.rational_part()));
    out.emplace_back(t, Scalar(Rational(0), c.surd_part(), c.radicand()));
}

inline std::string basis_text(const IndexTuple& t, bool bracketed) {
    if (bracketed)
        return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "]";
    return "f" + std::to_string(t[0]) + std::to_string(t[1]);
}

inline std::string expression_text(const KForm& d, bool bracketed) {
    if (d.is_zero()) return "0";
    std::vector<std::pair<IndexTuple, Scalar>> pieces;
    for (const auto& [t, c] : d.terms()) append_pieces(t, c, pieces);
    std::string out;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto& [t, c] = pieces[p];
        const bool negative = c.sign() < 0;
        const Scalar mag = negative ? -c : c;
        std::string body = basis_text(t, bracketed);
        if (!(mag == Scalar(1))) body = mag.to_string() + "*" + body;
        if (p == 0)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace detail

inline std::string serialize_document(const DslDocument& doc) {
    std::string out;
    if (doc.name) out += "# name: " + *doc.name + "\n";
    for (const auto& [key, value] : doc.parameters)
        out += "# param " + key + " = " + value.to_string() + "\n";
    out += "(";
    const bool bracketed = doc.dimension >= 10;
    for (int k = 0; k < doc.dimension; ++k) {
        if (k) out += ", ";
        out += detail::expression_text(doc.differentials[k], bracketed);
    }
    out += ")\n";
    return out;
}

inline std::string serialize_structure(const LieAlgebra& g) {
    return serialize_document(algebra_to_document(g));
}

}  // namespace hermlie
