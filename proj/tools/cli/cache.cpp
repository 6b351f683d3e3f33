#include "cache.hpp"

#include <json.hpp>

#include <stdexcept>

namespace flc::cli {

JsonLinesCache::JsonLinesCache(std::filesystem::path path) : path_(std::move(path))
{
    if (std::ifstream in(path_); in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            if (auto record = decode(line)) {
                records_.emplace(Key{record->pair.a(), record->pair.b(), record->prime}, *record);
            } else {
                ++skipped_;
            }
        }
    }
    writer_.open(path_, std::ios::app);
    if (!writer_) {
        throw std::runtime_error("cannot open cache file " + path_.string());
    }
}

std::optional<PLRecord> JsonLinesCache::find(const InitialPair& pair, std::uint64_t p)
{
    const std::lock_guard lock(mutex_);
    if (const auto it = records_.find(Key{pair.a(), pair.b(), p}); it != records_.end()) {
        return it->second;
    }
    return std::nullopt;
}

void JsonLinesCache::store(const PLRecord& record)
{
    const std::lock_guard lock(mutex_);
    const auto [it, inserted] = records_.emplace(Key{record.pair.a(), record.pair.b(), record.prime}, record);
    if (inserted) {
        writer_ << encode(record) << '\n';
        writer_.flush();
    }
}

std::size_t JsonLinesCache::size() const
{
    const std::lock_guard lock(mutex_);
    return records_.size();
}

std::string JsonLinesCache::encode(const PLRecord& record)
{
    const nlohmann::ordered_json j{{"a", record.pair.a()},
                                   {"b", record.pair.b()},
                                   {"p", record.prime},
                                   {"period", record.period},
                                   {"l_minus", record.lambda.minus},
                                   {"l_zero", record.lambda.zero},
                                   {"l_plus", record.lambda.plus},
                                   {"k", record.k}};
    return j.dump();
}

std::optional<PLRecord> JsonLinesCache::decode(const std::string& line)
{
    try {
        const auto j = nlohmann::json::parse(line);
        PLRecord record{j.at("p").get<std::uint64_t>(),
                        InitialPair(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>()),
                        j.at("period").get<std::uint64_t>(),
                        LambdaCounts{j.at("l_minus").get<std::uint64_t>(), j.at("l_zero").get<std::uint64_t>(),
                                     j.at("l_plus").get<std::uint64_t>()},
                        j.at("k").get<std::int64_t>()};
        if (!record.consistent() || !is_prime(static_cast<std::int64_t>(record.prime)) || record.prime < 3) {
            return std::nullopt;
        }
        return record;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace flc::cli
