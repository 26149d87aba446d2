#include "stforms/json_io.hpp"

#include "stforms/generators.hpp"

#include <json.hpp>

#include <set>

namespace stforms {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational entries must be \"num/den\" strings");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json matrix_to_json_value(const RatMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix matrix_from_json_value(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

Json poly_to_json_value(const Poly4& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["c"] = c.str();
        term["e"] = Json::array({e[0], e[1], e[2], e[3]});
        terms.push_back(std::move(term));
    }
    return terms;
}

Poly4 poly_from_json_value(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a term list");
    Poly4 p;
    std::set<Exponents> seen;
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("c") || !term.contains("e"))
            throw ParseError("polynomial term must carry \"c\" and \"e\"");
        const Json& ej = term["e"];
        if (!ej.is_array() || ej.size() != 4)
            throw ParseError("term exponents must be a 4-element array");
        Exponents e;
        for (int i = 0; i < 4; ++i) {
            if (!ej[i].is_number_integer() || ej[i].get<long long>() < 0)
                throw ParseError("term exponents must be non-negative integers");
            e[i] = ej[i].get<int>();
        }
        if (!seen.insert(e).second) throw ParseError("duplicate exponent tuple in polynomial");
        p += Poly4::monomial(e, rational_from_json(term["c"]));
    }
    return p;
}

std::vector<Poly4> poly_list_from_json(const Json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError("component list has the wrong length");
    std::vector<Poly4> out;
    for (const Json& pj : j) out.push_back(poly_from_json_value(pj));
    return out;
}

SpacetimeKind spacetime_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("\"spacetime\" must be a string");
    auto kind = parse_spacetime(j.get<std::string>());
    if (!kind) throw ParseError("unknown spacetime name");
    return *kind;
}

}  // namespace

std::string matrix_to_json(const RatMatrix& m) { return matrix_to_json_value(m).dump(); }

RatMatrix matrix_from_json(const std::string& text) {
    return matrix_from_json_value(parse_json(text));
}

std::string form_to_json(const Form& w) {
    Json j;
    j["degree"] = w.degree();
    const std::vector<Poly4> c = w.components();
    auto poly_list = [&](std::size_t begin, std::size_t count) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < count; ++i) arr.push_back(poly_to_json_value(c[begin + i]));
        return arr;
    };
    switch (w.degree()) {
        case 0:
        case 4:
            j["f"] = poly_to_json_value(c[0]);
            break;
        case 1:
        case 3:
            j["f"] = poly_to_json_value(c[0]);
            j["a"] = poly_list(1, 3);
            break;
        case 2:
            j["a"] = poly_list(0, 3);
            j["b"] = poly_list(3, 3);
            break;
    }
    return j.dump();
}

Form form_from_json(const std::string& text) {
    const Json j = parse_json(text);
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
        throw ParseError("form must carry an integer \"degree\"");
    const int degree = j["degree"].get<int>();
    if (degree < 0 || degree > 4) throw ParseError("form degree must be in 0..4");
    std::vector<Poly4> c;
    switch (degree) {
        case 0:
        case 4:
            if (!j.contains("f")) throw ParseError("degree 0/4 form needs \"f\"");
            c.push_back(poly_from_json_value(j["f"]));
            break;
        case 1:
        case 3: {
            if (!j.contains("f") || !j.contains("a"))
                throw ParseError("degree 1/3 form needs \"f\" and \"a\"");
            c.push_back(poly_from_json_value(j["f"]));
            for (Poly4& p : poly_list_from_json(j["a"], 3)) c.push_back(std::move(p));
            break;
        }
        case 2: {
            if (!j.contains("a") || !j.contains("b"))
                throw ParseError("degree 2 form needs \"a\" and \"b\"");
            for (Poly4& p : poly_list_from_json(j["a"], 3)) c.push_back(std::move(p));
            for (Poly4& p : poly_list_from_json(j["b"], 3)) c.push_back(std::move(p));
            break;
        }
    }
    return Form::from_components(degree, c);
}

std::string group_element_to_json(const GroupElement& g) {
    Json j;
    j["spacetime"] = to_string(g.spacetime);
    j["A"] = matrix_to_json_value(g.matrix);
    return j.dump();
}

GroupElement group_element_from_json(const std::string& text) {
    const Json j = parse_json(text);
    if (!j.is_object() || !j.contains("spacetime") || !j.contains("A"))
        throw ParseError("group element needs \"spacetime\" and \"A\"");
    GroupElement g{spacetime_from_json(j["spacetime"]), matrix_from_json_value(j["A"])};
    if (g.matrix.rows() != 4 || g.matrix.cols() != 4)
        throw ParseError("group element matrix must be 4x4");
    return g;
}

std::string intertwiner_space_to_json(const IntertwinerSpace& space,
                                      const std::vector<OperatorLabel>& labels) {
    Json j;
    j["spacetime"] = to_string(space.spacetime);
    j["p"] = space.p;
    j["q"] = space.q;
    j["mode"] = to_string(space.mode);
    j["dim"] = space.dim();
    Json basis = Json::array();
    for (const RatMatrix& b : space.basis) basis.push_back(matrix_to_json_value(b));
    j["basis"] = std::move(basis);
    Json label_list = Json::array();
    for (const OperatorLabel& l : labels) label_list.push_back(to_string(l.tag));
    j["labels"] = std::move(label_list);
    return j.dump();
}

IntertwinerSpace intertwiner_space_from_json(const std::string& text) {
    const Json j = parse_json(text);
    for (const char* key : {"spacetime", "p", "q", "mode", "dim", "basis"})
        if (!j.contains(key)) throw ParseError("intertwiner space is missing a key");
    IntertwinerSpace space{spacetime_from_json(j["spacetime"]), j["p"].get<int>(),
                           j["q"].get<int>(), ConstraintMode::Full, {}};
    auto mode = j["mode"].is_string() ? parse_mode(j["mode"].get<std::string>()) : std::nullopt;
    if (!mode) throw ParseError("unknown constraint mode");
    space.mode = *mode;
    if (space.p < 0 || space.p > 4 || space.q < 0 || space.q > 4)
        throw ParseError("intertwiner degrees must be in 0..4");
    for (const Json& bj : j["basis"]) {
        RatMatrix b = matrix_from_json_value(bj);
        if (b.rows() != degree_dim(space.q) || b.cols() != degree_dim(space.p))
            throw ParseError("intertwiner basis element has the wrong shape");
        space.basis.push_back(std::move(b));
    }
    if (j["dim"].get<std::size_t>() != space.basis.size())
        throw ParseError("intertwiner dim does not match its basis");
    return space;
}

}  // namespace stforms
