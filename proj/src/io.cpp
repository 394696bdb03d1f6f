#include "leibniz/io.hpp"

#include <json.hpp>

#include <set>
#include <tuple>

namespace leibniz {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::size_t require_count(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) throw ParseError("field '" + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Rational parse_literal(const json& v, const std::string& where) {
    try {
        if (v.is_string()) return Rational::from_string(v.get<std::string>());
        if (v.is_number_integer()) {
            return Rational::from_string(std::to_string(v.get<std::int64_t>()));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": coefficient must be an integer-ratio literal");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows, std::size_t dim, const std::string& where) {
    if (!rows.is_array() || rows.size() != dim)
        throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != dim)
            throw ParseError(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = parse_literal(row.at(j), where + "[" + std::to_string(i) + "][" +
                                                   std::to_string(j) + "]");
    }
    return m;
}

}  // namespace

LeibnizAlgebra parse_algebra(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("algebra document must be a JSON object");
    std::size_t dim = require_count(j, "dim");
    LeibnizAlgebra alg(dim);
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw ParseError("field 'name' must be a string");
        alg.name = j.at("name").get<std::string>();
    }
    if (!j.contains("products")) return alg;
    const auto& products = j.at("products");
    if (!products.is_array()) throw ParseError("field 'products' must be an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t idx = 0; idx < products.size(); ++idx) {
        const std::string where = "products[" + std::to_string(idx) + "]";
        const auto& entry = products.at(idx);
        if (!entry.is_array() || entry.size() != 4)
            throw ParseError(where + ": expected [i, j, k, coefficient]");
        std::size_t ijk[3];
        for (int t = 0; t < 3; ++t) {
            if (!entry.at(t).is_number_unsigned())
                throw ParseError(where + ": indices must be non-negative integers");
            ijk[t] = entry.at(t).get<std::size_t>();
            if (ijk[t] >= dim) throw ParseError(where + ": index out of range");
        }
        if (!seen.insert({ijk[0], ijk[1], ijk[2]}).second)
            throw ParseError(where + ": duplicate (i, j, k) key");
        alg.c[ijk[0]][ijk[1]][ijk[2]] = parse_literal(entry.at(3), where);
    }
    return alg;
}

std::string emit_algebra(const LeibnizAlgebra& alg) {
    json j;
    j["name"] = alg.name;
    j["dim"] = alg.dim;
    json products = json::array();
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t jj = 0; jj < alg.dim; ++jj)
            for (std::size_t k = 0; k < alg.dim; ++k) {
                if (alg.c[i][jj][k].is_zero()) continue;
                products.push_back(json::array({i, jj, k, alg.c[i][jj][k].str()}));
            }
    j["products"] = std::move(products);
    return j.dump(2) + "\n";
}

LeibnizModule parse_module(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("module document must be a JSON object");
    LeibnizModule mod;
    mod.alg_dim = require_count(j, "alg_dim");
    mod.mod_dim = require_count(j, "mod_dim");
    for (const char* key : {"lambda", "rho"}) {
        if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
        const auto& list = j.at(key);
        if (!list.is_array() || list.size() != mod.alg_dim)
            throw ParseError(std::string("field '") + key + "' must hold " +
                             std::to_string(mod.alg_dim) + " matrices");
        for (std::size_t i = 0; i < mod.alg_dim; ++i) {
            Matrix m = matrix_from_json(list.at(i), mod.mod_dim,
                                        std::string(key) + "[" + std::to_string(i) + "]");
            (key[0] == 'l' ? mod.lambda : mod.rho).push_back(std::move(m));
        }
    }
    return mod;
}

namespace {

json module_body(const LeibnizModule& mod) {
    json j;
    j["alg_dim"] = mod.alg_dim;
    j["mod_dim"] = mod.mod_dim;
    json lambda = json::array(), rho = json::array();
    for (const auto& m : mod.lambda) lambda.push_back(matrix_to_json(m));
    for (const auto& m : mod.rho) rho.push_back(matrix_to_json(m));
    j["lambda"] = std::move(lambda);
    j["rho"] = std::move(rho);
    return j;
}

}  // namespace

std::string emit_module(const LeibnizModule& mod) {
    return module_body(mod).dump(2) + "\n";
}

std::string emit_faithful_document(const FaithfulResult& result) {
    json j = module_body(result.module);
    json cert;
    cert["branch"] = branch_name(result.branch);
    cert["dim_v"] = result.dim_v;
    cert["kernel_dim"] = result.certificate.kernel_dim;
    cert["axioms_ok"] = result.certificate.axioms_ok;
    cert["dim_bound_ok"] = result.certificate.dim_bound_ok;
    cert["leftnil_ok"] = result.certificate.leftnil_ok;
    cert["rightnil_ok"] = result.certificate.rightnil_ok;
    j["certificate"] = std::move(cert);
    return j.dump(2) + "\n";
}

std::string branch_name(Branch b) {
    return b == Branch::adjoint ? "adjoint" : "construction";
}

}  // namespace leibniz
