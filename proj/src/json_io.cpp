#include "hoc/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hoc {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON");
    return doc;
}

}  // namespace

InequalityProblem parse_problem_json(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("nodes"))
        throw std::invalid_argument("problem file needs \"k\" and \"nodes\"");
    if (!doc["k"].is_number_integer()) throw std::invalid_argument("\"k\" must be an integer");
    int k = doc["k"].get<int>();
    std::vector<WeightedNode> nodes;
    for (const auto& nd : doc["nodes"]) {
        if (!nd.is_object() || !nd.contains("a") || !nd.contains("w"))
            throw std::invalid_argument("each node needs \"a\" and \"w\"");
        nodes.push_back({rational_parse(nd["a"].get<std::string>()),
                         rational_parse(nd["w"].get<std::string>())});
    }
    std::optional<Interval> domain;
    if (doc.contains("domain")) {
        const auto& d = doc["domain"];
        if (!d.is_array() || d.size() != 2)
            throw std::invalid_argument("\"domain\" must be [lo, hi]");
        domain.emplace(rational_parse(d[0].get<std::string>()),
                       rational_parse(d[1].get<std::string>()));
    }
    return InequalityProblem(std::move(nodes), k, domain);
}

std::string problem_to_json(const InequalityProblem& problem) {
    json doc;
    doc["k"] = problem.k();
    doc["nodes"] = json::array();
    for (const auto& nd : problem.nodes())
        doc["nodes"].push_back({{"a", rational_str(nd.a)}, {"w", rational_str(nd.w)}});
    doc["domain"] = {rational_str(problem.domain().lo), rational_str(problem.domain().hi)};
    return doc.dump(2) + "\n";
}

Configuration parse_configuration_json(const std::string& text) {
    json doc = parse_text(text);
    if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array())
        throw std::invalid_argument("configuration file needs a \"values\" array");
    std::vector<Rational> values;
    for (const auto& v : doc["values"]) values.push_back(rational_parse(v.get<std::string>()));
    return Configuration(std::move(values));
}

std::string verdict_to_json(const CriteriaReport& report, double elapsed_ms) {
    json doc;
    switch (report.verdict.status) {
        case Status::Holds: doc["verdict"] = "holds"; break;
        case Status::Fails: doc["verdict"] = "fails"; break;
        case Status::MomentViolation: doc["verdict"] = "moment_violation"; break;
    }
    if (report.verdict.witness) doc["witness"] = rational_str(*report.verdict.witness);
    if (report.verdict.moment_index) doc["moment_index"] = *report.verdict.moment_index;
    if (report.verdict.moment_value)
        doc["moment_value"] = rational_str(*report.verdict.moment_value);
    doc["certificate"] = report.verdict.certificate;
    doc["criteria"] = json::array();
    for (const auto& e : report.entries) {
        json entry{{"name", e.name}, {"outcome", e.outcome}};
        if (!e.detail.empty()) entry["detail"] = e.detail;
        doc["criteria"].push_back(entry);
    }
    doc["timing_ms"] = elapsed_ms;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

}  // namespace hoc
