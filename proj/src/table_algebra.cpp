#include "fdist/table_algebra.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fdist/errors.hpp"
#include "fdist/variety.hpp"

namespace fdist {

using nlohmann::json;

std::string TableAlgebra::str(const Element& x) const {
    if (is_zero(x)) return "0";
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        Rational a = x[i].sign() < 0 ? -x[i] : x[i];
        if (out.empty()) {
            if (x[i].sign() < 0) out += "-";
        } else {
            out += x[i].sign() < 0 ? " - " : " + ";
        }
        if (!a.is_one()) out += a.str() + "*";
        out += basis_[i];
    }
    return out;
}

namespace {

std::string triple_str(const TableAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
    const auto& names = alg.basis_names();
    return "(" + names[i] + ", " + names[j] + ", " + names[k] + ")";
}

void validate_commutative_associative(const TableAlgebra& alg, OpLabel op) {
    std::size_t d = alg.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ei = alg.basis_element(i), ej = alg.basis_element(j);
            if (!(alg.multiply(op, ei, ej) == alg.multiply(op, ej, ei)))
                throw ModelError("not commutative-associative: commutativity fails at (" +
                                 alg.basis_names()[i] + ", " + alg.basis_names()[j] + ")");
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                auto ei = alg.basis_element(i), ej = alg.basis_element(j),
                     ek = alg.basis_element(k);
                auto lhs = alg.multiply(op, alg.multiply(op, ei, ej), ek);
                auto rhs = alg.multiply(op, ei, alg.multiply(op, ej, ek));
                if (!(lhs == rhs))
                    throw ModelError("not commutative-associative: associativity fails at " +
                                     triple_str(alg, i, j, k));
            }
}

}  // namespace

void NovikovModel::validate_novikov(const TableAlgebra& alg) {
    for (const auto& id : variety_identities(Variety::novikov)) {
        std::size_t d = alg.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    std::map<std::string, TableAlgebra::Element> env{
                        {"x", alg.basis_element(i)},
                        {"y", alg.basis_element(j)},
                        {"z", alg.basis_element(k)}};
                    if (!alg.is_zero(eval_comb(alg, id.combo, env)))
                        throw ModelError("circle product violates " + id.name + " at " +
                                         triple_str(alg, i, j, k));
                }
    }
}

NovikovModel NovikovModel::from_derivation(std::string name, std::vector<std::string> basis,
                                           TableAlgebra::Table structure,
                                           std::vector<std::vector<Rational>> derivation) {
    std::size_t d = basis.size();
    TableAlgebra comm("comm:" + name, basis, {{OpLabel::mul, structure}});
    validate_commutative_associative(comm, OpLabel::mul);
    if (derivation.size() != d)
        throw ModelError("derivation matrix dimension mismatch");
    auto apply_d = [&](const TableAlgebra::Element& x) {
        TableAlgebra::Element r = comm.zero();
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) r[k] += x[i] * derivation[i][k];
        }
        return r;
    };
    // Leibniz rule d(xy) = d(x)y + x d(y) on all basis pairs.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto ei = comm.basis_element(i), ej = comm.basis_element(j);
            auto lhs = apply_d(comm.multiply(OpLabel::mul, ei, ej));
            auto rhs = comm.add(comm.multiply(OpLabel::mul, apply_d(ei), ej),
                                comm.multiply(OpLabel::mul, ei, apply_d(ej)));
            if (!(lhs == rhs))
                throw ModelError("not a derivation: Leibniz rule fails at (" + basis[i] +
                                 ", " + basis[j] + ")");
        }
    // circ table: e_i o e_j = d(e_i) e_j.
    TableAlgebra::Table circ(d, std::vector<TableAlgebra::Element>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            circ[i][j] =
                comm.multiply(OpLabel::mul, apply_d(comm.basis_element(i)), comm.basis_element(j));
    NovikovModel m;
    m.alg_ = TableAlgebra(std::move(name), std::move(basis), {{OpLabel::circ, std::move(circ)}});
    validate_novikov(m.alg_);
    return m;
}

NovikovModel NovikovModel::direct(std::string name, std::vector<std::string> basis,
                                  TableAlgebra::Table circ_table) {
    NovikovModel m;
    m.alg_ =
        TableAlgebra(std::move(name), std::move(basis), {{OpLabel::circ, std::move(circ_table)}});
    validate_novikov(m.alg_);
    return m;
}

NovikovModel NovikovModel::upoly3() {
    // k[u]/(u^3), basis 1, u, u^2, derivation d/du.
    std::vector<std::string> basis{"1", "u", "u2"};
    auto vec = [&](int a, int b, int c) {
        return TableAlgebra::Element{Rational(a), Rational(b), Rational(c)};
    };
    TableAlgebra::Table mul(3, std::vector<TableAlgebra::Element>(3));
    mul[0][0] = vec(1, 0, 0);
    mul[0][1] = mul[1][0] = vec(0, 1, 0);
    mul[0][2] = mul[2][0] = vec(0, 0, 1);
    mul[1][1] = vec(0, 0, 1);
    mul[1][2] = mul[2][1] = vec(0, 0, 0);
    mul[2][2] = vec(0, 0, 0);
    std::vector<std::vector<Rational>> deriv{
        {Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(2), Rational(0)},
    };
    return from_derivation("upoly3", basis, mul, deriv);
}

NovikovModel NovikovModel::virasoro() {
    TableAlgebra::Table circ(1, std::vector<TableAlgebra::Element>(1));
    circ[0][0] = TableAlgebra::Element{Rational(1)};
    return direct("virasoro", {"e"}, circ);
}

NovikovModel NovikovModel::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);
    json j;
    in >> j;
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> basis;
    if (j.contains("basis"))
        basis = j.at("basis").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i));
    if (basis.size() != dim) throw Error("basis names do not match dim in " + path);
    auto rat = [](const json& v) {
        if (v.is_number_integer()) return Rational((long)v.get<long>());
        return Rational::from_string(v.get<std::string>());
    };
    TableAlgebra::Table structure(dim, std::vector<TableAlgebra::Element>(dim));
    const json& prod = j.at("product");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            TableAlgebra::Element e;
            for (const auto& v : prod.at(i).at(k)) e.push_back(rat(v));
            if (e.size() != dim) throw Error("bad product row in " + path);
            structure[i][k] = e;
        }
    std::vector<std::vector<Rational>> deriv;
    for (const auto& row : j.at("derivation")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rat(v));
        if (r.size() != dim) throw Error("bad derivation row in " + path);
        deriv.push_back(r);
    }
    std::string name = j.value("name", path);
    return from_derivation(name, basis, structure, deriv);
}

NovikovModel NovikovModel::by_name_or_file(const std::string& spec) {
    if (spec == "virasoro") return virasoro();
    if (spec == "upoly3") return upoly3();
    return load_file(spec);
}

TableAlgebra sample_leibniz_algebra() {
    // [x,x] = y, all other basis brackets zero. Non-Lie: [x,x] != 0.
    TableAlgebra::Table br(2, std::vector<TableAlgebra::Element>(2));
    br[0][0] = TableAlgebra::Element{Rational(0), Rational(1)};
    br[0][1] = br[1][0] = br[1][1] = TableAlgebra::Element{Rational(0), Rational(0)};
    TableAlgebra alg("leibniz2", {"x", "y"}, {{OpLabel::bracket, br}});
    // Guard the choice: the Leibniz identity must hold on all basis triples.
    for (const auto& id : variety_identities(Variety::leibniz))
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    std::map<std::string, TableAlgebra::Element> env{{"x", alg.basis_element(i)},
                                                                     {"y", alg.basis_element(j)},
                                                                     {"z", alg.basis_element(k)}};
                    if (!alg.is_zero(eval_comb(alg, id.combo, env)))
                        throw ModelError("sample algebra violates the " + id.name + " identity");
                }
    return alg;
}

TableAlgebra sl2_as_leibniz() {
    // [e,f] = h, [h,e] = 2e, [h,f] = -2f, extended anticommutatively.
    const std::size_t d = 3;  // e, f, h
    auto vec = [&](int a, int b, int c) {
        return TableAlgebra::Element{Rational(a), Rational(b), Rational(c)};
    };
    TableAlgebra::Table br(d, std::vector<TableAlgebra::Element>(d, vec(0, 0, 0)));
    br[0][1] = vec(0, 0, 1);   // [e,f] = h
    br[1][0] = vec(0, 0, -1);  // [f,e] = -h
    br[2][0] = vec(2, 0, 0);   // [h,e] = 2e
    br[0][2] = vec(-2, 0, 0);  // [e,h] = -2e
    br[2][1] = vec(0, -2, 0);  // [h,f] = -2f
    br[1][2] = vec(0, 2, 0);   // [f,h] = 2f
    return TableAlgebra("sl2", {"e", "f", "h"}, {{OpLabel::bracket, br}});
}

TableLeibnizQuotient::TableLeibnizQuotient(const TableAlgebra& src) {
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i; j < src.dim(); ++j) {
            auto ei = src.basis_element(i), ej = src.basis_element(j);
            auto sym = src.add(src.multiply(OpLabel::bracket, ei, ej),
                               src.multiply(OpLabel::bracket, ej, ei));
            if (!src.is_zero(sym)) span_.add_row(sym);
        }
}

}  // namespace fdist
