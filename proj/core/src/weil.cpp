#include "weilad/weil.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace weilad {

WeilSettings::WeilSettings(int var_count, std::vector<Exponents> basis,
                           std::vector<int> max_powers,
                           std::map<std::pair<int, int>, std::vector<Rational>> mult_table,
                           std::map<Exponents, std::vector<Rational>> non_van)
    : var_count_(var_count),
      basis_(std::move(basis)),
      max_powers_(std::move(max_powers)),
      mult_table_(std::move(mult_table)),
      non_van_(std::move(non_van)) {
    const std::size_t l = basis_.size();
    if (l == 0) throw dimension_error("WeilSettings: empty basis");
    if (static_cast<int>(max_powers_.size()) != var_count_)
        throw dimension_error("WeilSettings: max_powers length mismatch");
    for (const auto& b : basis_)
        if (static_cast<int>(b.size()) != var_count_)
            throw dimension_error("WeilSettings: basis monomial length mismatch");
    if (!is_unit_monomial(basis_[0]))
        throw dimension_error("WeilSettings: basis[0] must be the unit monomial");
    for (std::size_t i = 0; i < l; ++i) basis_index_[basis_[i]] = static_cast<int>(i);
    if (basis_index_.size() != l) throw dimension_error("WeilSettings: duplicate basis monomial");
    for (const auto& [ij, row] : mult_table_) {
        if (ij.first > ij.second || ij.first < 0 || ij.second >= static_cast<int>(l))
            throw dimension_error("WeilSettings: bad multiplication-table key");
        if (row.size() != l) throw dimension_error("WeilSettings: multiplication row length");
    }
    for (const auto& [m, row] : non_van_) {
        if (static_cast<int>(m.size()) != var_count_ || row.size() != l)
            throw dimension_error("WeilSettings: bad non-vanishing entry");
    }
}

const std::vector<Rational>& WeilSettings::product(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = mult_table_.find({i, j});
    if (it == mult_table_.end())
        throw dimension_error("WeilSettings: missing multiplication-table entry");
    return it->second;
}

const std::vector<Rational>& WeilSettings::non_vanishing(const Exponents& alpha) const {
    auto it = non_van_.find(alpha);
    if (it == non_van_.end())
        throw dimension_error("WeilSettings: monomial outside the non-vanishing table");
    return it->second;
}

int WeilSettings::basis_index(const Exponents& e) const {
    auto it = basis_index_.find(e);
    return it == basis_index_.end() ? -1 : it->second;
}

bool WeilSettings::same_algebra(const WeilSettings& o) const {
    return var_count_ == o.var_count_ && basis_ == o.basis_ && mult_table_ == o.mult_table_;
}

namespace {

std::vector<Rational> to_vector(const Polynomial<Rational>& nf,
                                const std::map<Exponents, int>& index, std::size_t l) {
    std::vector<Rational> row(l, Rational(0));
    for (const auto& [e, c] : nf.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw dimension_error("normal form contains a non-standard monomial");
        row[static_cast<std::size_t>(it->second)] = c;
    }
    return row;
}

/// Odometer over the box alpha <= caps (componentwise), lexicographic when
/// the leftmost position is the most significant.
bool next_in_box(Exponents& alpha, const std::vector<int>& caps) {
    int i = static_cast<int>(alpha.size()) - 1;
    while (i >= 0) {
        if (++alpha[i] <= caps[i]) return true;
        alpha[i] = 0;
        --i;
    }
    return false;
}

}  // namespace

WeilTestResult weil_test(const Ideal& ideal, long long size_cap) {
    const int n = ideal.var_count;
    GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::degrevlex);

    if (!is_zero_dimensional(gb)) return {nullptr, "not zero-dimensional"};

    std::vector<Exponents> basis = quotient_monomial_basis(gb);
    if (basis.empty()) return {nullptr, "unit ideal (quotient is the zero ring)"};

    // Per-variable nilpotency: the monic generator of I /\ Q[X_i] must be a
    // pure power.
    std::vector<int> max_powers(n, 0);
    for (int i = 0; i < n; ++i) {
        auto p = univariate_minimal_generator(gb, i);
        if (p.terms().size() != 1)
            return {nullptr, "variable " + std::to_string(i) + " is not nilpotent"};
        max_powers[i] = p.degree() - 1;
    }

    long long box = 1;
    for (int i = 0; i < n; ++i) {
        box *= max_powers[i] + 1;
        if (box > size_cap)
            throw size_limit_error("weil_test: non-vanishing table would exceed the size cap");
    }

    // Basis sorted ascending lexicographically: stable across tensor
    // composition and independent of the Groebner order in use.
    std::sort(basis.begin(), basis.end(), MonomialLess{MonomialOrder::lex});
    const std::size_t l = basis.size();
    std::map<Exponents, int> index;
    for (std::size_t i = 0; i < l; ++i) index[basis[i]] = static_cast<int>(i);

    std::map<std::pair<int, int>, std::vector<Rational>> table;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i; j < l; ++j) {
            auto prod = Polynomial<Rational>::monomial(monomial_mul(basis[i], basis[j]), 1);
            table[{static_cast<int>(i), static_cast<int>(j)}] =
                to_vector(normal_form(prod, gb), index, l);
        }
    }

    std::map<Exponents, std::vector<Rational>> non_van;
    Exponents alpha(n, 0);
    do {
        auto m = Polynomial<Rational>::monomial(alpha, 1);
        non_van[alpha] = to_vector(normal_form(m, gb), index, l);
    } while (next_in_box(alpha, max_powers));

    auto settings = std::make_shared<WeilSettings>(n, std::move(basis), std::move(max_powers),
                                                   std::move(table), std::move(non_van));
    return {std::move(settings), ""};
}

SettingsPtr dorder_settings(int m) {
    if (m < 1) throw domain_error("DOrder requires order >= 1");
    std::vector<Exponents> basis;
    for (int i = 0; i < m; ++i) basis.push_back({i});
    std::map<std::pair<int, int>, std::vector<Rational>> table;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            std::vector<Rational> row(m, Rational(0));
            if (i + j < m) row[i + j] = 1;
            table[{i, j}] = std::move(row);
        }
    }
    std::map<Exponents, std::vector<Rational>> non_van;
    for (int a = 0; a < m; ++a) {
        std::vector<Rational> row(m, Rational(0));
        row[a] = 1;
        non_van[{a}] = std::move(row);
    }
    return std::make_shared<WeilSettings>(1, std::move(basis), std::vector<int>{m - 1},
                                          std::move(table), std::move(non_van));
}

SettingsPtr d1_settings() { return dorder_settings(2); }

SettingsPtr weil_tensor(const WeilSettings& w1, const WeilSettings& w2) {
    const int n1 = w1.var_count(), n2 = w2.var_count();
    const int l1 = w1.dimension(), l2 = w2.dimension();

    auto concat = [](const Exponents& a, const Exponents& b) {
        Exponents r = a;
        r.insert(r.end(), b.begin(), b.end());
        return r;
    };

    std::vector<Exponents> basis;
    basis.reserve(static_cast<std::size_t>(l1) * l2);
    for (int j = 0; j < l1; ++j)
        for (int k = 0; k < l2; ++k) basis.push_back(concat(w1.basis()[j], w2.basis()[k]));

    std::vector<int> max_powers = concat(
        Exponents(w1.max_powers().begin(), w1.max_powers().end()),
        Exponents(w2.max_powers().begin(), w2.max_powers().end()));

    std::map<std::pair<int, int>, std::vector<Rational>> table;
    const int l = l1 * l2;
    for (int p = 0; p < l; ++p) {
        for (int q = p; q < l; ++q) {
            const auto& c = w1.product(p / l2, q / l2);
            const auto& d = w2.product(p % l2, q % l2);
            table[{p, q}] = kronecker<Rational>(c, d);
        }
    }

    std::map<Exponents, std::vector<Rational>> non_van;
    for (const auto& [a, c] : w1.non_van())
        for (const auto& [b, d] : w2.non_van())
            non_van[concat(a, b)] = kronecker<Rational>(c, d);

    return std::make_shared<WeilSettings>(n1 + n2, std::move(basis), std::move(max_powers),
                                          std::move(table), std::move(non_van));
}

namespace {

nlohmann::json rational_row_to_json(const std::vector<Rational>& row) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : row) arr.push_back(to_string(c));
    return arr;
}

std::vector<Rational> rational_row_from_json(const nlohmann::json& arr) {
    std::vector<Rational> row;
    for (const auto& v : arr) row.push_back(Rational(v.get<std::string>()));
    return row;
}

}  // namespace

std::string settings_to_json(const WeilSettings& s, int indent) {
    nlohmann::json j;
    j["basis"] = s.basis();
    j["max_powers"] = s.max_powers();
    auto table = nlohmann::json::array();
    for (const auto& [ij, row] : s.mult_table()) {
        table.push_back({{"i", ij.first}, {"j", ij.second}, {"coeffs", rational_row_to_json(row)}});
    }
    j["mult_table"] = std::move(table);
    auto nv = nlohmann::json::array();
    for (const auto& [m, row] : s.non_van()) {
        nv.push_back({{"monomial", m}, {"coeffs", rational_row_to_json(row)}});
    }
    j["non_van"] = std::move(nv);
    return j.dump(indent);
}

SettingsPtr settings_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("settings JSON: ") + e.what(), e.byte);
    }
    try {
        std::vector<Exponents> basis = j.at("basis").get<std::vector<Exponents>>();
        std::vector<int> max_powers = j.at("max_powers").get<std::vector<int>>();
        std::map<std::pair<int, int>, std::vector<Rational>> table;
        for (const auto& entry : j.at("mult_table"))
            table[{entry.at("i").get<int>(), entry.at("j").get<int>()}] =
                rational_row_from_json(entry.at("coeffs"));
        std::map<Exponents, std::vector<Rational>> non_van;
        for (const auto& entry : j.at("non_van"))
            non_van[entry.at("monomial").get<Exponents>()] =
                rational_row_from_json(entry.at("coeffs"));
        return std::make_shared<WeilSettings>(static_cast<int>(max_powers.size()),
                                              std::move(basis), std::move(max_powers),
                                              std::move(table), std::move(non_van));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("settings JSON: ") + e.what(), 0);
    }
}

}  // namespace weilad
