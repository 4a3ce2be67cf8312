#include "latmix/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <set>
#include <sstream>

#include "latmix/errors.hpp"

namespace latmix {

namespace {

using nlohmann::json;

Int json_to_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

json int_to_json(const Int& v) {
    // Stay within JSON number range where possible; fall back to strings.
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

CollectionDocument parse_collection_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level must be a JSON object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
        throw ParseError("missing or invalid \"ambient_dim\"");
    long long n = j["ambient_dim"].get<long long>();
    if (n < 1) throw ParseError("\"ambient_dim\" must be >= 1");
    if (!j.contains("supports") || !j["supports"].is_array())
        throw ParseError("missing or invalid \"supports\"");

    CollectionDocument doc;
    std::vector<std::vector<std::vector<Int>>> supports;
    for (std::size_t i = 0; i < j["supports"].size(); ++i) {
        const json& s = j["supports"][i];
        if (!s.is_array() || s.empty())
            throw ParseError("support " + std::to_string(i + 1) + ": supports must be nonempty");
        std::vector<std::vector<Int>> pts;
        std::set<std::vector<Int>> seen;
        for (std::size_t p = 0; p < s.size(); ++p) {
            const json& pt = s[p];
            if (!pt.is_array() || pt.size() != static_cast<std::size_t>(n))
                throw ParseError("support " + std::to_string(i + 1) + ", point " +
                                 std::to_string(p + 1) + ": expected a vector of length " +
                                 std::to_string(n));
            std::vector<Int> v;
            for (std::size_t c = 0; c < pt.size(); ++c)
                v.push_back(json_to_int(pt[c], "support " + std::to_string(i + 1) + ", point " +
                                                   std::to_string(p + 1)));
            if (!seen.insert(v).second)
                doc.warnings.push_back("support " + std::to_string(i + 1) + ", point " +
                                       std::to_string(p + 1) + ": duplicate point, deduplicated");
            pts.push_back(std::move(v));
        }
        supports.push_back(std::move(pts));
    }
    doc.collection = SupportCollection::create(static_cast<std::size_t>(n), supports);
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != supports.size())
            throw ParseError("\"labels\" must list one string per support");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("\"labels\" must list one string per support");
            doc.labels.push_back(l.get<std::string>());
        }
    }
    return doc;
}

CollectionDocument parse_collection_text(const std::string& text) {
    std::vector<std::vector<std::vector<Int>>> supports;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t dim = 0;
    std::vector<std::string> warnings;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        };
        skip_ws();
        if (pos == line.size()) continue;
        std::vector<std::vector<Int>> pts;
        std::set<std::vector<Int>> seen;
        while (pos < line.size()) {
            if (line[pos] != '(')
                throw ParseError("line " + std::to_string(lineno) + ": expected '(' at column " +
                                 std::to_string(pos + 1));
            ++pos;
            std::vector<Int> v;
            while (true) {
                skip_ws();
                std::size_t start = pos;
                if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
                while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
                if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))))
                    throw ParseError("line " + std::to_string(lineno) + ": expected an integer");
                v.emplace_back(line.substr(start, pos - start));
                skip_ws();
                if (pos < line.size() && line[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < line.size() && line[pos] == ')') {
                    ++pos;
                    break;
                }
                throw ParseError("line " + std::to_string(lineno) + ": expected ',' or ')'");
            }
            if (dim == 0 && supports.empty() && pts.empty()) dim = v.size();
            if (v.size() != dim)
                throw ParseError("line " + std::to_string(lineno) + ": point has " +
                                 std::to_string(v.size()) + " coordinates, expected " +
                                 std::to_string(dim));
            if (!seen.insert(v).second)
                warnings.push_back("line " + std::to_string(lineno) +
                                   ": duplicate point, deduplicated");
            pts.push_back(std::move(v));
            skip_ws();
        }
        if (pts.empty())
            throw ParseError("line " + std::to_string(lineno) + ": supports must be nonempty");
        supports.push_back(std::move(pts));
    }
    if (supports.empty()) throw ParseError("input contains no supports");
    CollectionDocument doc;
    doc.warnings = std::move(warnings);
    doc.collection = SupportCollection::create(dim, supports);
    return doc;
}

std::string subset_to_text(const IndexSubset& j) {
    if (j.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(j[i] + 1);
    }
    return out + "}";
}

}  // namespace

CollectionDocument parse_collection(const std::string& text) {
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw ParseError("empty input");
    if (text[pos] == '{') return parse_collection_json(text);
    return parse_collection_text(text);
}

nlohmann::json collection_to_json(const CollectionDocument& doc) {
    json supports = json::array();
    for (const auto& s : doc.collection.supports) {
        json pts = json::array();
        for (std::size_t p = 0; p < s.rows; ++p) {
            json v = json::array();
            for (std::size_t c = 0; c < s.cols; ++c) v.push_back(int_to_json(s(p, c)));
            pts.push_back(std::move(v));
        }
        supports.push_back(std::move(pts));
    }
    json out;
    out["ambient_dim"] = doc.collection.ambient_dim;
    out["supports"] = std::move(supports);
    if (!doc.name.empty()) out["name"] = doc.name;
    if (!doc.labels.empty()) out["labels"] = doc.labels;
    return out;
}

std::string input_digest(const CollectionDocument& doc) {
    std::string canonical = collection_to_json(doc).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

nlohmann::json subset_to_json(const IndexSubset& j) {
    json out = json::array();
    for (std::size_t i : j) out.push_back(i + 1);
    return out;
}

std::string rational_to_string(const Rat& x) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(x);
    if (boost::multiprecision::denominator(x) != 1)
        os << "/" << boost::multiprecision::denominator(x);
    return os.str();
}

nlohmann::json polytope_to_json(const LatticePolytope& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) {
        json pt = json::array();
        for (const auto& x : v) {
            if (boost::multiprecision::denominator(x) == 1)
                pt.push_back(int_to_json(boost::multiprecision::numerator(x)));
            else
                pt.push_back(rational_to_string(x));
        }
        verts.push_back(std::move(pt));
    }
    json out;
    out["ambient_dim"] = p.ambient_dim;
    out["intrinsic_dim"] = p.intrinsic_dim;
    out["vertices"] = std::move(verts);  // already sorted canonically
    out["lattice_volume"] = rational_to_string(lattice_volume(p));
    return out;
}

nlohmann::json defect_report_to_json(const DefectReport& r, std::size_t num_supports) {
    json out;
    out["minimal_defect"] = r.minimal_defect;
    out["essential"] = subset_to_json(r.essential);
    out["essential_index"] = int_to_json(r.essential_index);
    out["generically_consistent"] = r.generically_consistent;
    out["consistency_codim"] = r.consistency_codim;
    out["omega_dim"] = r.omega_dim;
    out["incidence_dim"] = r.incidence_dim;
    out["generic_zero_set_dim"] = r.generic_zero_set_dim;
    if (num_supports <= 8 && !r.defect_by_subset.empty()) {
        json table = json::array();
        for (const auto& [mask, d] : r.defect_by_subset) {
            IndexSubset j;
            for (std::size_t i = 0; i < num_supports; ++i)
                if (mask & (std::uint32_t(1) << i)) j.push_back(i);
            table.push_back(json{{"subset", subset_to_json(j)}, {"defect", d}});
        }
        out["defect_by_subset"] = std::move(table);
    }
    return out;
}

nlohmann::json structure_to_json(const ZeroSetStructure& s) {
    json out;
    out["essential"] = subset_to_json(s.essential);
    out["num_components"] = int_to_json(s.num_components);
    out["component_ambient_dim"] = s.component_ambient_dim;
    out["zero_set_dim"] = s.zero_set_dim;
    out["complete_intersection"] = s.complete_intersection;
    json polys = json::array();
    for (const auto& p : s.residual_polytopes) polys.push_back(polytope_to_json(p));
    out["residual_polytopes"] = std::move(polys);
    return out;
}

nlohmann::json invariant_report_to_json(const InvariantReport& r) {
    json out;
    std::size_t k = r.structure.essential.size() + r.structure.residual_polytopes.size();
    out["defects"] = defect_report_to_json(r.defect_report, k);
    out["structure"] = structure_to_json(r.structure);
    json inv;
    if (r.root_count)
        inv["root_count"] = int_to_json(*r.root_count);
    else
        inv["root_count_note"] = r.root_count_note;
    if (r.euler_characteristic)
        inv["euler_characteristic"] = int_to_json(*r.euler_characteristic);
    else
        inv["euler_characteristic_note"] = r.euler_note;
    if (r.geometric_genus)
        inv["geometric_genus"] = int_to_json(*r.geometric_genus);
    else
        inv["geometric_genus_note"] = r.genus_note;
    out["invariants"] = std::move(inv);
    return out;
}

nlohmann::json report_document(const nlohmann::json& body, const CollectionDocument& doc,
                               std::uint64_t timing_ms) {
    json out;
    out["version"] = kToolVersion;
    out["input_digest"] = input_digest(doc);
    out["timing_ms"] = timing_ms;
    if (!doc.name.empty()) out["name"] = doc.name;
    if (!doc.warnings.empty()) out["warnings"] = doc.warnings;
    out["report"] = body;
    return out;
}

std::string defect_report_to_text(const DefectReport& r) {
    std::ostringstream os;
    os << "minimal defect d(A) = " << r.minimal_defect << "\n";
    os << "essential subcollection = " << subset_to_text(r.essential) << "\n";
    os << "ind(J) = " << r.essential_index << "\n";
    os << "generically consistent = " << (r.generically_consistent ? "yes" : "no") << "\n";
    os << "consistency codimension = " << r.consistency_codim << "\n";
    os << "dim Omega_A = " << r.omega_dim << "\n";
    os << "incidence variety dim = " << r.incidence_dim << "\n";
    os << "generic zero set dim = " << r.generic_zero_set_dim << "\n";
    return os.str();
}

std::string structure_to_text(const ZeroSetStructure& s) {
    std::ostringstream os;
    os << "essential subcollection = " << subset_to_text(s.essential) << "\n";
    os << "components = " << s.num_components << "\n";
    os << "component ambient dim = " << s.component_ambient_dim << "\n";
    os << "zero set dim = " << s.zero_set_dim << "\n";
    os << "complete intersection = " << (s.complete_intersection ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < s.residual_polytopes.size(); ++i) {
        const auto& p = s.residual_polytopes[i];
        os << "residual polytope " << (i + 1) << ": " << p.vertices.size()
           << " vertices, volume " << rational_to_string(lattice_volume(p)) << "\n";
    }
    return os.str();
}

std::string invariant_report_to_text(const InvariantReport& r) {
    std::ostringstream os;
    os << defect_report_to_text(r.defect_report);
    os << structure_to_text(r.structure);
    if (r.root_count)
        os << "root count = " << *r.root_count << "\n";
    else
        os << "root count: " << r.root_count_note << "\n";
    if (r.euler_characteristic)
        os << "euler characteristic = " << *r.euler_characteristic << "\n";
    else
        os << "euler characteristic: " << r.euler_note << "\n";
    if (r.geometric_genus)
        os << "geometric genus = " << *r.geometric_genus << "\n";
    else
        os << "geometric genus: " << r.genus_note << "\n";
    return os.str();
}

}  // namespace latmix
