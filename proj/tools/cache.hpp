#pragma once

// Content-addressed result cache: one JSON record per (command, input digest,
// engine version). The result is stored as an exact string so a warm hit
// reprints byte-identical output. Writes go through a temp file and rename.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "sha256.hpp"

namespace cache {

namespace fs = std::filesystem;

struct Store {
    fs::path dir;
    std::string engine;

    bool enabled() const { return !dir.empty(); }

    fs::path record_path(const std::string& key) const { return dir / (key + ".json"); }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(record_path(key));
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        nlohmann::json record = nlohmann::json::parse(buf.str(), nullptr, false);
        if (record.is_discarded() || !record.contains("engine") || !record.contains("result"))
            return std::nullopt;
        if (record["engine"].get<std::string>() != engine) return std::nullopt;
        return record["result"].get<std::string>();
    }

    void store(const std::string& key, const std::string& command, const std::string& result,
               long wall_ms) const {
        if (!enabled()) return;
        std::error_code ec;
        fs::create_directories(dir, ec);
        nlohmann::ordered_json record;
        record["command"] = command;
        record["digest"] = key;
        record["engine"] = engine;
        record["wall_ms"] = wall_ms;
        record["result"] = result;
        fs::path tmp = dir / ("tmp." + std::to_string(::getpid()) + "." + key);
        {
            std::ofstream out(tmp);
            out << record.dump(2) << "\n";
        }
        fs::rename(tmp, record_path(key), ec);
        if (ec) fs::remove(tmp, ec);
    }

    // Removes records from other engine versions (or everything with `all`).
    int gc(bool all) const {
        if (!enabled() || !fs::exists(dir)) return 0;
        int removed = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
            bool stale = all;
            if (!stale) {
                std::ifstream in(entry.path());
                std::stringstream buf;
                buf << in.rdbuf();
                nlohmann::json record = nlohmann::json::parse(buf.str(), nullptr, false);
                stale = record.is_discarded() || !record.contains("engine") ||
                        record["engine"].get<std::string>() != engine;
            }
            if (stale) {
                std::error_code ec;
                if (fs::remove(entry.path(), ec)) ++removed;
            }
        }
        return removed;
    }
};

// Digest of everything that determines a command's output.
inline std::string input_key(const std::string& command,
                             const std::string& engine,
                             const std::vector<std::pair<std::string, std::string>>& inputs) {
    std::ostringstream manifest;
    manifest << "command=" << command << "\n" << "engine=" << engine << "\n";
    for (const auto& [name, value] : inputs)
        manifest << name << "=" << value.size() << ":" << value << "\n";
    return sha256::hex(manifest.str());
}

} // namespace cache
