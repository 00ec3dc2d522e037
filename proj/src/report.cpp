#include "derilab/report.hpp"

#include <filesystem>
#include <fstream>

namespace derilab {

Json h1_report_json(const H1Report& rep) {
    Json j;
    j["algebra"] = rep.algebra;
    j["size"] = rep.size;
    j["k"] = rep.k;
    j["mode"] = rep.mode;
    j["ring"] = rep.ring;
    j["module_dim"] = rep.module_dim;
    j["rank"] = rep.rank;
    j["free_rank"] = rep.free_rank;
    j["torsion"] = rep.torsion;
    j["rank_per_prime"] = rep.rank_per_prime;
    j["prime_disagreement"] = rep.prime_disagreement;
    j["early_exit"] = rep.early_exit;
    j["columns"] = rep.columns;
    j["digest"] = hex_digest(rep.digest);
    j["from_cache"] = rep.from_cache;
    j["evidence"] = rep.evidence;
    if (rep.has_assembly) {
        j["h1_degree0_free"] = rep.h1_degree0_free;
        j["h1_degree0_torsion"] = rep.h1_degree0_torsion;
        j["coinvariants_dim"] = rep.coinvariants_dim;
        j["assembly_consistent"] = rep.assembly_consistent;
    }
    return j;
}

namespace {

Json spider_json(const Spider& s) { return color_word_str(s.colors()); }

Spider spider_from_json(const Json& j, int g) { return {parse_color_word(j.get<std::string>()), g}; }

}  // namespace

Json certificate_json(const ReductionCertificate& cert) {
    Json j;
    j["g"] = cert.g;
    j["input"] = spider_json(cert.input);
    Json brackets = Json::array();
    for (const auto& bt : cert.brackets) {
        Json b;
        b["left"] = spider_json(bt.left);
        b["right"] = spider_json(bt.right);
        b["coeff"] = bt.coeff.str();
        brackets.push_back(std::move(b));
    }
    j["brackets"] = std::move(brackets);
    Json remainder = Json::array();
    for (const auto& st : cert.remainder) {
        Json r;
        r["spider"] = spider_json(st.s);
        r["coeff"] = st.coeff.str();
        remainder.push_back(std::move(r));
    }
    j["remainder"] = std::move(remainder);
    j["fresh_colors"] = Json::array();
    for (Color c : cert.fresh_log) j["fresh_colors"].push_back(int(c));
    j["input_multiplicity"] = cert.input_multiplicity;
    j["max_multiplicity"] = cert.max_multiplicity;
    j["max_backward_steps"] = cert.max_backward_steps;
    j["steps"] = cert.steps;
    return j;
}

ReductionCertificate certificate_from_json(const Json& j) {
    const int g = j.at("g").get<int>();
    ReductionCertificate cert;
    cert.g = g;
    cert.input = spider_from_json(j.at("input"), g);
    for (const auto& b : j.at("brackets"))
        cert.brackets.push_back({spider_from_json(b.at("left"), g),
                                 spider_from_json(b.at("right"), g),
                                 Int(b.at("coeff").get<std::string>())});
    for (const auto& r : j.at("remainder"))
        cert.remainder.push_back(
            {spider_from_json(r.at("spider"), g), Int(r.at("coeff").get<std::string>())});
    for (const auto& c : j.at("fresh_colors")) cert.fresh_log.push_back(Color(c.get<int>()));
    cert.input_multiplicity = j.value("input_multiplicity", 0);
    cert.max_multiplicity = j.value("max_multiplicity", 0);
    cert.max_backward_steps = j.value("max_backward_steps", 0);
    cert.steps = j.value("steps", 0ll);
    return cert;
}

Json report_document(const Json& config, const Json& results, double seconds, long long checks,
                     long long failures) {
    Json j;
    j["schema"] = kSchema;
    j["tool"] = std::string(kToolName) + " " + kToolVersion;
    j["config"] = config;
    j["results"] = results;
    j["timing"] = Json{{"seconds", seconds}};
    j["oracle_checks"] = Json{{"passed", checks - failures}, {"failed", failures}};
    return j;
}

std::string results_csv(const Json& results) {
    std::vector<std::string> columns;
    for (const auto& row : results) {
        if (!row.is_object()) continue;
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(columns.begin(), columns.end(), it.key()) == columns.end())
                columns.push_back(it.key());
    }
    std::sort(columns.begin(), columns.end());
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : results) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            if (row.contains(columns[c])) {
                const Json& v = row.at(columns[c]);
                std::string s = v.is_string() ? v.get<std::string>() : v.dump();
                // quote anything that would break the flat projection
                if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
                    std::string q = "\"";
                    for (char ch : s) {
                        if (ch == '"') q += '"';
                        q += ch;
                    }
                    q += '"';
                    s = std::move(q);
                }
                out += s;
            }
        }
        out += '\n';
    }
    return out;
}

namespace {

std::string cache_path(const std::string& dir, std::uint64_t digest) {
    return dir + "/" + hex_digest(digest) + ".json";
}

}  // namespace

bool cache_lookup(const std::string& dir, const H1Report& probe, H1Report& out) {
    if (dir.empty()) return false;
    std::ifstream in(cache_path(dir, probe.digest));
    if (!in) return false;
    Json j;
    try {
        in >> j;
    } catch (...) {
        return false;
    }
    if (j.value("digest", "") != hex_digest(probe.digest)) return false;
    out = probe;
    out.rank = j.at("rank").get<long long>();
    out.free_rank = j.at("free_rank").get<long long>();
    out.torsion = j.at("torsion").get<std::vector<std::string>>();
    out.rank_per_prime = j.at("rank_per_prime").get<std::vector<long long>>();
    out.early_exit = j.at("early_exit").get<bool>();
    out.columns = j.at("columns").get<long long>();
    if (j.contains("coinvariants_dim")) {
        out.has_assembly = true;
        out.h1_degree0_free = j.at("h1_degree0_free").get<long long>();
        out.h1_degree0_torsion = j.at("h1_degree0_torsion").get<std::vector<std::string>>();
        out.coinvariants_dim = j.at("coinvariants_dim").get<long long>();
        out.assembly_consistent = j.at("assembly_consistent").get<bool>();
    }
    out.from_cache = true;
    return true;
}

void cache_store(const std::string& dir, const H1Report& rep) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream outf(cache_path(dir, rep.digest));
    if (!outf) return;
    outf << h1_report_json(rep).dump(2) << "\n";
}

}  // namespace derilab
