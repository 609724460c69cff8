#include "novbott/documents.hpp"

#include <fstream>
#include <sstream>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

const Json& require(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw invalid_input(std::string("document is missing field '") + key + "'");
    }
    return *it;
}

std::size_t require_count(const Json& doc, const char* key) {
    const Json& j = require(doc, key);
    // signed-but-nonnegative covers values assembled in memory rather than
    // parsed from text
    if (!j.is_number_unsigned() &&
        !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw invalid_input(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::string require_string(const Json& doc, const char* key) {
    const Json& j = require(doc, key);
    if (!j.is_string()) {
        throw invalid_input(std::string("field '") + key + "' must be a string");
    }
    return j.get<std::string>();
}

std::vector<std::size_t> count_list(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (const Json& x : j) {
        if (!x.is_number_unsigned() &&
            !(x.is_number_integer() && x.get<std::int64_t>() >= 0)) {
            throw invalid_input(std::string(what) + " entries must be nonnegative integers");
        }
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

ExpVec exponent_list(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    ExpVec out;
    out.reserve(j.size());
    for (const Json& x : j) {
        if (!x.is_number_integer()) {
            throw invalid_input(std::string(what) + " entries must be integers");
        }
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<double> real_list(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const Json& x : j) {
        if (!x.is_number()) {
            throw invalid_input(std::string(what) + " entries must be numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

QMatrix rational_matrix(const Json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw invalid_input(std::string(what) + " rows must be arrays");
        cols = j[0].size();
    }
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw invalid_input(std::string(what) + " rows must have equal length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string()) {
                throw invalid_input(std::string(what) +
                                    " entries must be rational strings like \"p/q\"");
            }
            m.at(r, c) = parse_rational(row[c].get<std::string>());
        }
    }
    return m;
}

WordFactor parse_word_factor(const std::string& token) {
    WordFactor f;
    const std::string suffix = "^-1";
    if (token.size() > suffix.size() &&
        token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
        f.generator = token.substr(0, token.size() - suffix.size());
        f.inverse = true;
    } else {
        f.generator = token;
        f.inverse = false;
    }
    if (f.generator.empty()) throw invalid_input("empty generator token in word");
    return f;
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw invalid_input("document is not valid JSON");
    return doc;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open document '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

std::string document_format(const Json& doc) {
    if (!doc.is_object()) throw invalid_input("document must be a JSON object");
    return require_string(doc, "format");
}

ComplexDescription complex_from_json(const Json& doc) {
    if (document_format(doc) != kComplexFormat) {
        throw invalid_input("expected a complex document (format \"novbott/complex\")");
    }
    ComplexDescription d;
    d.name = require_string(doc, "name");
    d.top_degree = require_count(doc, "top_degree");
    d.fiber_dim = require_count(doc, "fiber_dim");
    d.num_vars = require_count(doc, "num_vars");
    d.cell_counts = count_list(require(doc, "cells"), "cells");
    d.period_basis = real_list(require(doc, "period_basis"), "period_basis");

    if (doc.contains("raw_coboundaries")) {
        d.raw = true;
        const Json& raws = doc["raw_coboundaries"];
        if (!raws.is_array()) throw invalid_input("raw_coboundaries must be an array");
        if (d.cell_counts.size() != d.top_degree + 1) {
            throw invalid_input("cells must cover degrees 0..top_degree");
        }
        d.raw_coboundaries.reserve(d.top_degree);
        for (std::size_t p = 0; p < d.top_degree; ++p) {
            d.raw_coboundaries.emplace_back(d.cell_counts[p + 1] * d.fiber_dim,
                                            d.cell_counts[p] * d.fiber_dim, d.num_vars);
        }
        for (const Json& block : raws) {
            const std::size_t degree = require_count(block, "degree");
            if (degree >= d.top_degree) {
                throw invalid_input("raw coboundary degree out of range");
            }
            const Json& entries = require(block, "entries");
            if (!entries.is_array()) throw invalid_input("entries must be an array");
            for (const Json& entry : entries) {
                const std::size_t row = require_count(entry, "row");
                const std::size_t col = require_count(entry, "col");
                const Json& terms = require(entry, "terms");
                if (!terms.is_array()) throw invalid_input("terms must be an array");
                LaurentPoly poly(d.num_vars);
                for (const Json& term : terms) {
                    const ExpVec e = exponent_list(require(term, "exponents"), "exponents");
                    if (e.size() != d.num_vars) {
                        throw invalid_input("term exponent vector has wrong length");
                    }
                    poly.add_term(e, parse_rational(require_string(term, "coeff")));
                }
                if (row >= d.raw_coboundaries[degree].rows() ||
                    col >= d.raw_coboundaries[degree].cols()) {
                    throw invalid_input("raw coboundary entry out of range");
                }
                d.raw_coboundaries[degree].set(row, col, std::move(poly));
            }
        }
        return d;
    }

    const Json& gens = require(doc, "generators");
    if (!gens.is_array()) throw invalid_input("generators must be an array");
    for (const Json& g : gens) {
        GeneratorData gd;
        gd.name = require_string(g, "name");
        gd.matrix = rational_matrix(require(g, "matrix"), "generator matrix");
        gd.exponents = exponent_list(require(g, "exponents"), "generator exponents");
        if (gd.exponents.size() != d.num_vars) {
            throw invalid_input("generator '" + gd.name + "' needs " +
                                std::to_string(d.num_vars) + " exponents");
        }
        d.generators.push_back(std::move(gd));
    }
    const Json& bounds = require(doc, "boundaries");
    if (!bounds.is_array()) throw invalid_input("boundaries must be an array");
    for (const Json& b : bounds) {
        BoundaryIncidence inc;
        inc.degree = require_count(b, "degree");
        inc.cell = require_count(b, "cell");
        inc.face = require_count(b, "face");
        const Json& terms = require(b, "terms");
        if (!terms.is_array()) throw invalid_input("terms must be an array");
        for (const Json& t : terms) {
            BoundaryTerm term;
            const Json& sign = require(t, "sign");
            if (!sign.is_number_integer()) {
                throw invalid_input("term sign must be an integer");
            }
            term.sign = sign.get<int>();
            const Json& word = require(t, "word");
            if (!word.is_array()) throw invalid_input("term word must be an array");
            for (const Json& token : word) {
                if (!token.is_string()) {
                    throw invalid_input("word tokens must be strings");
                }
                term.word.push_back(parse_word_factor(token.get<std::string>()));
            }
            inc.terms.push_back(std::move(term));
        }
        d.incidences.push_back(std::move(inc));
    }
    return d;
}

MorseDocument morse_from_json(const Json& doc) {
    if (document_format(doc) != kMorseFormat) {
        throw invalid_input("expected a critical-data document (format \"novbott/morse\")");
    }
    MorseDocument out;
    out.name = require_string(doc, "name");
    out.data.fiber_dim = require_count(doc, "fiber_dim");
    const Json& comps = require(doc, "components");
    if (!comps.is_array()) throw invalid_input("components must be an array");
    for (const Json& c : comps) {
        CriticalComponent z;
        z.name = require_string(c, "name");
        z.index = require_count(c, "index");
        z.poincare = count_list(require(c, "poincare"), "poincare");
        out.data.components.push_back(std::move(z));
    }
    return out;
}

DeformationFamily family_from_json(const Json& doc) {
    if (document_format(doc) != kFamilyFormat) {
        throw invalid_input("expected a family document (format \"novbott/family\")");
    }
    DeformationFamily f;
    f.name = require_string(doc, "name");
    f.base_point = parse_rational(require_string(doc, "base_point"));
    f.order = require_count(doc, "order");
    f.cochain_ranks = count_list(require(doc, "cochain_ranks"), "cochain_ranks");
    if (f.cochain_ranks.empty()) throw invalid_input("cochain_ranks must be nonempty");
    const std::size_t n = f.cochain_ranks.size() - 1;
    f.terms.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        f.terms[p].assign(f.order + 1,
                          QMatrix(f.cochain_ranks[p + 1], f.cochain_ranks[p]));
    }
    const Json& terms = require(doc, "terms");
    if (!terms.is_array()) throw invalid_input("terms must be an array");
    for (const Json& t : terms) {
        const std::size_t degree = require_count(t, "degree");
        const std::size_t power = require_count(t, "power");
        if (degree >= n) throw invalid_input("family term degree out of range");
        if (power > f.order) throw invalid_input("family term power exceeds the order");
        f.terms[degree][power] = rational_matrix(require(t, "matrix"), "family matrix");
    }
    validate_family(f);
    return f;
}

BettiDocument betti_from_json(const Json& doc) {
    if (document_format(doc) != kBettiFormat) {
        throw invalid_input("expected a Betti document (format \"novbott/betti\")");
    }
    BettiDocument out;
    out.name = require_string(doc, "name");
    out.fiber_dim = require_count(doc, "fiber_dim");
    out.betti = count_list(require(doc, "betti"), "betti");
    return out;
}

}  // namespace novbott
