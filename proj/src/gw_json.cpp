#include "a1deg/gw_json.hpp"

#include <sstream>

namespace a1deg {

nlohmann::json gw_class_json(const SymmetricForm& q) {
    GWClass cls = invariants(q);
    nlohmann::json j;
    j["rank"] = cls.rank;
    j["disc"] = cls.disc ? nlohmann::json(cls.disc->str()) : nlohmann::json(nullptr);
    j["signature"] = cls.signature ? nlohmann::json(*cls.signature) : nlohmann::json(nullptr);
    if (cls.hasse.empty()) {
        j["hasse"] = nullptr;
    } else {
        nlohmann::json h = nlohmann::json::object();
        for (const auto& [place, eps] : cls.hasse) h[place.str()] = eps;
        j["hasse"] = h;
    }
    j["presentation"] =
        cls.char2 ? nlohmann::json(nullptr) : nlohmann::json(presentation_string(present(q)));
    return j;
}

nlohmann::json gram_json(const SymmetricForm& q) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < q.rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < q.rank(); ++j) row.push_back(q.entry(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::string gw_class_pretty(const SymmetricForm& q) {
    GWClass cls = invariants(q);
    std::ostringstream os;
    os << "rank " << cls.rank;
    if (cls.disc) os << ", disc " << cls.disc->str();
    if (cls.signature) os << ", signature " << *cls.signature;
    for (const auto& [place, eps] : cls.hasse)
        os << ", hasse@" << place.str() << " " << (eps > 0 ? "+1" : "-1");
    if (!cls.char2) os << ", class " << presentation_string(present(q));
    return os.str();
}

}  // namespace a1deg
