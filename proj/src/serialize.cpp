#include "nambu/serialize.hpp"

#include "nambu/parse.hpp"

namespace nambu {
namespace {

template <GradedKind K>
Json graded_to_json(const Graded<K>& a) {
    Json j;
    j["coords"] = a.coords()->names();
    j["grade"] = a.grade();
    Json terms = Json::array();
    for (const auto& [idx, f] : a.terms()) {
        Json t;
        t["idx"] = idx;
        t["coef"] = f.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <GradedKind K>
Graded<K> graded_from_json(const Json& j) {
    try {
        const auto coords = Coords::make(j.at("coords").get<std::vector<std::string>>());
        Graded<K> r(coords, j.at("grade").get<std::size_t>());
        for (const auto& t : j.at("terms")) {
            auto idx = t.at("idx").get<IndexSet>();
            r.add_term(idx, parse_polynomial(t.at("coef").get<std::string>(), coords));
        }
        return r;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed graded element JSON: ") + e.what());
    }
}

} // namespace

Json to_json(const KForm& a) { return graded_to_json(a); }
Json to_json(const KVector& v) { return graded_to_json(v); }
KForm kform_from_json(const Json& j) { return graded_from_json<GradedKind::Form>(j); }
KVector kvector_from_json(const Json& j) { return graded_from_json<GradedKind::Multivector>(j); }

std::string dump(const Json& j) { return j.dump(); }

} // namespace nambu
