#pragma once

#include <cstdint>
#include <ctime>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hierag {

// FNV-1a, used for stable node ids and tree fingerprints. Never feed the
// result into anything security-sensitive.
constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = kFnvOffset) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

// Whitespace tokenization. This is the default tokenizer for chunking,
// context budgets and usage counters; metric tokenization lives in evalkit.
std::vector<std::string> ws_tokenize(std::string_view text);
std::size_t ws_token_count(std::string_view text);

// Glob with '*' (any run, including '/') and '?' (any single char).
bool glob_match(std::string_view pattern, std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Wall clock, overridable via SOURCE_DATE_EPOCH for reproducible artifacts.
std::time_t current_epoch();
std::string iso8601_utc(std::time_t t);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

} // namespace hierag
