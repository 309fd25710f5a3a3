#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>

#include "fmzv/rational.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

struct FmzvKey {
    Composition k;
    std::int64_t p = 0;
    int N = 0;

    std::string str() const { return to_string(k) + '|' + std::to_string(p) + '|' + std::to_string(N); }
};

// Persistent residue cache. The file holds one record per line,
//
//   <composition> <prime> <depth> <residue>
//
// with the composition written as "1,2" ("-" when empty) and the residue in
// decimal. The file is append-only; duplicate keys are legal and the last
// occurrence wins on load. Lines that do not parse, or whose residue is out
// of range for p^N, are skipped with a warning and never trusted.
class FmzvCache {
public:
    explicit FmzvCache(std::filesystem::path file) : path_(std::move(file)) {
        load();
        out_.open(path_, std::ios::app);
        if (!out_) throw config_error("cannot open cache file for append: " + path_.string());
    }

    const std::filesystem::path& path() const { return path_; }

    std::optional<Int> get(const Composition& k, std::int64_t p, int N) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(FmzvKey{k, p, N}.str());
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void put(const Composition& k, std::int64_t p, int N, const Int& residue) {
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.insert_or_assign(FmzvKey{k, p, N}.str(), residue);
        (void)it;
        out_ << to_string(k) << ' ' << p << ' ' << N << ' ' << residue.str() << '\n';
        out_.flush();
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    std::size_t skipped_lines() const { return skipped_; }

    void clear() {
        std::unique_lock lock(mu_);
        map_.clear();
        out_.close();
        std::ofstream truncate(path_, std::ios::trunc);
        truncate.close();
        out_.open(path_, std::ios::app);
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;  // no file yet
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (!load_line(line)) {
                ++skipped_;
                std::cerr << "fmzv cache: skipping invalid line " << lineno << " in " << path_.string()
                          << "\n";
            }
        }
    }

    bool load_line(const std::string& line) {
        std::istringstream is(line);
        std::string comp_field, residue_field;
        std::int64_t p = 0;
        int N = 0;
        if (!(is >> comp_field >> p >> N >> residue_field)) return false;
        std::string extra;
        if (is >> extra) return false;
        if (p < 2 || N < 1 || N > 64) return false;
        Composition k;
        try {
            k = Composition::parse(comp_field);
        } catch (const domain_error&) {
            return false;
        }
        Int residue;
        try {
            residue = Int(residue_field);
        } catch (const std::exception&) {
            return false;
        }
        Int modulus = 1;
        for (int i = 0; i < N; ++i) modulus *= p;
        if (residue < 0 || residue >= modulus) return false;
        map_.insert_or_assign(FmzvKey{k, p, N}.str(), residue);
        return true;
    }

    std::filesystem::path path_;
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Int> map_;
    std::ofstream out_;
    std::size_t skipped_ = 0;
};

}  // namespace fmzv
