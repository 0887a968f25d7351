#pragma once

// Process-wide memo for built series, keyed by a readable string that
// encodes (family, parameters, order).  Thread safe; concurrent builders
// may race on the same key, in which case the last write wins and both
// callers get a value that is correct for the key.  Entries are never
// evicted; series are shared read-only.

#include "dpfg/series.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace dpfg {

template <class S>
class SeriesCache {
public:
    std::shared_ptr<const S> lookup(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second;
    }

    void store(const std::string& key, S value) {
        auto p = std::make_shared<const S>(std::move(value));
        std::lock_guard<std::mutex> lock(mu_);
        map_[key] = std::move(p);
    }

    // The build callback runs outside the lock so unrelated lookups are
    // never blocked behind an expensive construction.
    template <class F>
    std::shared_ptr<const S> get_or_build(const std::string& key, F&& build) {
        if (auto hit = lookup(key)) return hit;
        auto p = std::make_shared<const S>(build());
        {
            std::lock_guard<std::mutex> lock(mu_);
            map_[key] = p;
        }
        return p;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<const S>> map_;
};

inline SeriesCache<RationalSeries>& rational_cache() {
    static SeriesCache<RationalSeries> cache;
    return cache;
}

inline SeriesCache<GaussianSeries>& gaussian_cache() {
    static SeriesCache<GaussianSeries> cache;
    return cache;
}

}  // namespace dpfg
