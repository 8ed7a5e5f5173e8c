#include "grouplen/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace grouplen {

namespace {

struct Field {
    const char* key;
    std::uint64_t Config::*member;
};

constexpr Field kFields[] = {
    {"element_cap", &Config::element_cap},
    {"subgroup_cap", &Config::subgroup_cap},
    {"class_cap", &Config::class_cap},
    {"degree_cap", &Config::degree_cap},
    {"chop_cap", &Config::chop_cap},
    {"regular_cap", &Config::regular_cap},
    {"max_series_steps", &Config::max_series_steps},
    {"chop_retries", &Config::chop_retries},
    {"seed", &Config::seed},
};

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

Config Config::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config JSON must be an object");

    Config cfg;
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const Field& f : kFields) {
            if (key == f.key) {
                if (!value.is_number_unsigned())
                    throw std::invalid_argument("config key '" + key +
                                                "' must be a nonnegative integer");
                cfg.*(f.member) = value.get<std::uint64_t>();
                known = true;
                break;
            }
        }
        if (!known) throw std::invalid_argument("unknown config key '" + key + "'");
    }
    return cfg;
}

Config Config::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

Config Config::with_env_overrides() const {
    Config cfg = *this;
    for (const Field& f : kFields) {
        std::string name = "GROUPLEN_" + upper(f.key);
        if (const char* value = std::getenv(name.c_str())) {
            try {
                std::size_t pos = 0;
                unsigned long long parsed = std::stoull(value, &pos);
                if (pos != std::string(value).size()) throw std::invalid_argument("");
                cfg.*(f.member) = parsed;
            } catch (const std::exception&) {
                throw std::invalid_argument("environment variable " + name +
                                            " is not a nonnegative integer: " + value);
            }
        }
    }
    return cfg;
}

std::string Config::to_json_text() const {
    nlohmann::ordered_json doc;
    for (const Field& f : kFields) doc[f.key] = this->*(f.member);
    return doc.dump();
}

}  // namespace grouplen
