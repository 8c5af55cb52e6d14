#pragma once

// Curve documents: JSON {"genus": int, "coeffs": ["num/den", ...]} with
// coefficients ordered low degree to high degree, plus a plain-text
// polynomial reader ("x^8 - 3*x^6 + 1/2") that produces the same document.

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperinv/curve.hpp"
#include "hyperinv/poly.hpp"

namespace hyperinv {

using ordered_json = nlohmann::ordered_json;

struct CurveDocument {
    int genus = 0;
    std::vector<Rational> coeffs;  // low -> high degree

    Poly<Rational> polynomial() const { return Poly<Rational>(coeffs); }

    /// Builds the curve; a non-squarefree polynomial throws degenerate_curve.
    HyperellipticCurve curve() const { return HyperellipticCurve(genus, polynomial()); }
};

/// Checks the document shape: last coefficient nonzero and, for curves,
/// genus consistent with degree. Bare polynomials skip the genus check.
inline void validate(const CurveDocument& doc, bool curve = true)
{
    if (doc.coeffs.empty() || doc.coeffs.back().is_zero())
        throw error(errc::parse_error, "coeffs must be non-empty with a nonzero last entry");
    if (!curve) return;
    const int d = static_cast<int>(doc.coeffs.size()) - 1;
    if (doc.genus < 2 || (d != 2 * doc.genus + 1 && d != 2 * doc.genus + 2))
        throw error(errc::parse_error, "genus " + std::to_string(doc.genus) + " does not match degree " +
                                           std::to_string(d));
}

inline CurveDocument curve_document_from_json(const ordered_json& j, bool curve = true)
{
    if (!j.is_object()) throw error(errc::parse_error, "curve document must be a JSON object");
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw error(errc::parse_error, "curve document needs a \"coeffs\" array");
    CurveDocument doc;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_string())
            doc.coeffs.push_back(Rational::parse(c.get<std::string>()));
        else if (c.is_number_integer())
            doc.coeffs.push_back(Rational(c.get<long>()));
        else
            throw error(errc::parse_error, "coefficients must be strings \"num/den\" or integers");
    }
    if (j.contains("genus")) {
        if (!j.at("genus").is_number_integer()) throw error(errc::parse_error, "\"genus\" must be an integer");
        doc.genus = j.at("genus").get<int>();
    } else {
        doc.genus = (static_cast<int>(doc.coeffs.size()) - 2) / 2;
    }
    validate(doc, curve);
    return doc;
}

inline ordered_json to_json(const CurveDocument& doc)
{
    ordered_json j;
    j["genus"] = doc.genus;
    j["coeffs"] = ordered_json::array();
    for (const auto& c : doc.coeffs) j["coeffs"].push_back(c.to_string());
    return j;
}

/// Parses a sum of terms c*x^k in the variable x or X. Coefficients are
/// integers or fractions; "*" between coefficient and variable is optional.
inline Poly<Rational> parse_polynomial(std::string_view text)
{
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> error {
        return error(errc::parse_error, "polynomial: " + what + " at offset " + std::to_string(pos));
    };
    auto read_uint = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    };

    std::vector<Rational> coeffs;
    bool first = true;
    skip();
    if (pos == text.size()) throw fail("empty input");
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        first = false;

        std::optional<Rational> coeff;
        std::string num = read_uint();
        if (!num.empty()) {
            skip();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip();
                std::string den = read_uint();
                if (den.empty()) throw fail("missing denominator");
                coeff = Rational::parse(num + "/" + den);
            } else {
                coeff = Rational::parse(num);
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                if (pos == text.size() || (text[pos] != 'x' && text[pos] != 'X')) throw fail("expected variable");
            }
        }

        std::size_t exponent = 0;
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            ++pos;
            exponent = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                std::string e = read_uint();
                if (e.empty() || e.size() > 6) throw fail("bad exponent");
                exponent = std::stoul(e);
            }
        } else if (!coeff) {
            throw fail("expected a coefficient or the variable");
        }

        Rational value = coeff.value_or(Rational(1));
        if (negative) value = -value;
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, Rational(0));
        coeffs[exponent] = coeffs[exponent] + value;
        skip();
    }
    return Poly<Rational>(std::move(coeffs));
}

/// Plain-text sugar: genus defaults to floor((deg - 1) / 2).
inline CurveDocument curve_document_from_text(std::string_view text, std::optional<int> genus = std::nullopt,
                                              bool curve = true)
{
    Poly<Rational> f = parse_polynomial(text);
    CurveDocument doc;
    doc.coeffs.assign(f.coeffs().begin(), f.coeffs().end());
    doc.genus = genus.value_or((f.degree() - 1) / 2);
    validate(doc, curve);
    return doc;
}

inline CurveDocument read_curve_document(const std::string& path, bool curve = true)
{
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    ordered_json j;
    try {
        j = ordered_json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::parse_error, "'" + path + "': " + e.what());
    }
    return curve_document_from_json(j, curve);
}

}  // namespace hyperinv
