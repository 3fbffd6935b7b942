#include "p1stab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace p1stab {

std::string json_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_json(const StabilityCondition& sc) {
    std::ostringstream out;
    out << "{\"schema\":\"" << kSchemaTag << "\",\"i\":" << sc.base_twist()
        << ",\"alpha\":" << json_double(sc.alpha()) << ",\"beta\":" << json_double(sc.beta())
        << ",\"log_m_alpha\":" << json_double(sc.log_m_alpha())
        << ",\"log_m_beta\":" << json_double(sc.log_m_beta())
        << ",\"regime\":\"" << to_string(sc.regime()) << "\"}";
    return out.str();
}

std::string to_json(const GroupElement& g) {
    std::ostringstream out;
    out << "{\"z\":[" << json_double(g.z.real()) << "," << json_double(g.z.imag())
        << "],\"tensor\":" << g.tensor << "}";
    return out.str();
}

std::string to_json(const HNFiltration& f) {
    std::ostringstream out;
    out << "{\"schema\":\"" << kSchemaTag << "\",\"pieces\":[";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k) out << ",";
        out << "{\"phase\":" << json_double(f[k].phase) << ",\"object\":\""
            << format_object(f[k].piece) << "\",\"charge\":[" << json_double(f[k].charge.real())
            << "," << json_double(f[k].charge.imag()) << "]}";
    }
    out << "]}";
    return out.str();
}

std::string to_json(const HeartDescriptor& h) {
    std::ostringstream out;
    out << "{\"schema\":\"" << kSchemaTag << "\",";
    if (const auto* c = std::get_if<CohShift>(&h)) {
        out << "\"kind\":\"coh_shift\",\"j\":" << c->j;
    } else if (const auto* p = std::get_if<HeartPair>(&h)) {
        out << "\"kind\":\"pair\",\"p\":" << p->p << ",\"i\":" << p->i << ",\"j\":" << p->j;
    } else {
        const auto& e = std::get<ExoticHeart>(h);
        out << "\"kind\":\"exotic\",\"points\":[";
        for (std::size_t k = 0; k < e.points.size(); ++k) {
            if (k) out << ",";
            out << "\"" << e.points[k] << "\"";
        }
        out << "]";
    }
    out << "}";
    return out.str();
}

std::string to_json(const ReductionResult& r) {
    std::ostringstream out;
    out << "{\"schema\":\"" << kSchemaTag << "\",\"point\":[" << json_double(r.point.w.real())
        << "," << json_double(r.point.w.imag()) << "],\"region\":\"" << to_string(r.region)
        << "\",\"used\":" << to_json(r.used) << "}";
    return out.str();
}

std::string to_json(const std::vector<PathSample>& samples) {
    std::ostringstream out;
    out << "{\"schema\":\"" << kSchemaTag << "\",\"samples\":[";
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (k) out << ",";
        out << "{\"t\":" << json_double(samples[k].t) << ",\"cell\":\""
            << to_string(samples[k].cell) << "\"}";
    }
    out << "]}";
    return out.str();
}

StabilityCondition parse_condition(const std::string& json_or_path) {
    std::string text = json_or_path;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::ifstream in(json_or_path);
        if (!in) {
            throw std::invalid_argument("cannot read stability condition from '" + json_or_path +
                                        "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid condition JSON: ") + e.what());
    }
    for (const char* key : {"i", "alpha", "beta", "log_m_alpha", "log_m_beta"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("condition JSON missing field '") + key +
                                        "'");
        }
    }
    if (!j["i"].is_number_integer()) {
        throw std::invalid_argument("condition field 'i' must be an integer");
    }
    return StabilityCondition(j["i"].get<std::int64_t>(), j["alpha"].get<double>(),
                              j["beta"].get<double>(), j["log_m_alpha"].get<double>(),
                              j["log_m_beta"].get<double>());
}

}  // namespace p1stab
