#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::io {

// Flat key = value file with [section] headers. [target] and [obstacle] sections
// may repeat, one per entity. Unknown sections or keys are errors.
class Config {
public:
    struct Section {
        std::string name;
        std::map<std::string, std::string> kv;
        int line = 0;
    };

    static Config parse(const std::string& text) {
        Config c;
        c.raw_ = text;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        Section* cur = nullptr;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string s = strip(line);
            if (s.empty() || s[0] == '#' || s[0] == ';') continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw InvalidConfig("line " + std::to_string(lineno) + ": malformed section");
                c.sections_.push_back({strip(s.substr(1, s.size() - 2)), {}, lineno});
                cur = &c.sections_.back();
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw InvalidConfig("line " + std::to_string(lineno) + ": expected key = value");
            if (!cur)
                throw InvalidConfig("line " + std::to_string(lineno) + ": key outside any section");
            const std::string key = strip(s.substr(0, eq));
            const std::string val = strip(s.substr(eq + 1));
            if (key.empty()) throw InvalidConfig("line " + std::to_string(lineno) + ": empty key");
            if (cur->kv.count(key))
                throw InvalidConfig("duplicate key '" + cur->name + "." + key + "'");
            cur->kv[key] = val;
        }
        return c;
    }

    static Config load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw InvalidConfig("cannot open config file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse(ss.str());
    }

    const std::vector<Section>& sections() const { return sections_; }

    std::vector<const Section*> all(const std::string& name) const {
        std::vector<const Section*> out;
        for (const auto& s : sections_)
            if (s.name == name) out.push_back(&s);
        return out;
    }

    // unique section; nullptr if absent, error if repeated
    const Section* find(const std::string& name) const {
        const Section* hit = nullptr;
        for (const auto& s : sections_) {
            if (s.name != name) continue;
            if (hit) throw InvalidConfig("section [" + name + "] appears more than once");
            hit = &s;
        }
        return hit;
    }

    // Rejects any section or key not present in the schema.
    void validate_schema(
        const std::map<std::string, std::set<std::string>>& schema) const {
        for (const auto& s : sections_) {
            const auto it = schema.find(s.name);
            if (it == schema.end())
                throw InvalidConfig("unknown section [" + s.name + "]");
            for (const auto& [k, v] : s.kv)
                if (!it->second.count(k))
                    throw InvalidConfig("unknown key '" + s.name + "." + k + "'");
        }
    }

    // FNV-1a over the raw text; stamped into every output artifact.
    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const char ch : raw_) {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    static double get_double(const Section& s, const std::string& key, double dflt) {
        const auto it = s.kv.find(key);
        return it == s.kv.end() ? dflt : to_double(s.name, key, it->second);
    }
    static int get_int(const Section& s, const std::string& key, int dflt) {
        const auto it = s.kv.find(key);
        if (it == s.kv.end()) return dflt;
        const double d = to_double(s.name, key, it->second);
        return static_cast<int>(d);
    }
    static bool get_bool(const Section& s, const std::string& key, bool dflt) {
        const auto it = s.kv.find(key);
        if (it == s.kv.end()) return dflt;
        if (it->second == "true" || it->second == "1") return true;
        if (it->second == "false" || it->second == "0") return false;
        throw InvalidConfig("key '" + s.name + "." + key + "': expected true/false");
    }
    static std::string get_string(const Section& s, const std::string& key,
                                  const std::string& dflt) {
        const auto it = s.kv.find(key);
        return it == s.kv.end() ? dflt : it->second;
    }
    static Vec3 get_vec3(const Section& s, const std::string& key, const Vec3& dflt) {
        const auto it = s.kv.find(key);
        if (it == s.kv.end()) return dflt;
        std::istringstream ss(it->second);
        Vec3 v;
        if (!(ss >> v.x >> v.y >> v.z))
            throw InvalidConfig("key '" + s.name + "." + key + "': expected three numbers");
        std::string rest;
        if (ss >> rest)
            throw InvalidConfig("key '" + s.name + "." + key + "': expected exactly three numbers");
        return v;
    }
    static double require_double(const Section& s, const std::string& key) {
        const auto it = s.kv.find(key);
        if (it == s.kv.end())
            throw InvalidConfig("missing required key '" + s.name + "." + key + "'");
        return to_double(s.name, key, it->second);
    }
    static Vec3 require_vec3(const Section& s, const std::string& key) {
        if (!s.kv.count(key))
            throw InvalidConfig("missing required key '" + s.name + "." + key + "'");
        return get_vec3(s, key, {});
    }

private:
    static std::string strip(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }
    static double to_double(const std::string& sec, const std::string& key,
                            const std::string& val) {
        std::size_t pos = 0;
        double d = 0.0;
        try {
            d = std::stod(val, &pos);
        } catch (const std::exception&) {
            throw InvalidConfig("key '" + sec + "." + key + "': not a number: '" + val + "'");
        }
        if (pos != val.size())
            throw InvalidConfig("key '" + sec + "." + key + "': trailing junk in '" + val + "'");
        return d;
    }

    std::vector<Section> sections_;
    std::string raw_;
};

}  // namespace mtt::io
