#include "ochain/rmax_tree.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ochain {

RMaxTree1D::RMaxTree1D(std::vector<Key1D> keys, std::vector<std::int64_t> prefs)
    : keys_(std::move(keys)) {
    const std::size_t n = keys_.size();
    if (!prefs.empty() && prefs.size() != n) {
        throw std::invalid_argument("pref count does not match key count");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(keys_[i] < keys_[i + 1])) {
            throw std::invalid_argument("tree keys must be sorted and distinct");
        }
    }
    if (n == 0) return;
    node_.assign(2 * n, TreeEntry{});
    for (std::size_t i = 0; i < n; ++i) {
        node_[n + i].pref = prefs.empty() ? 0 : prefs[i];
        node_[n + i].tag = keys_[i].tag;
    }
    for (std::size_t v = n - 1; v >= 1; --v) {
        node_[v] = better(node_[2 * v], node_[2 * v + 1]) ? node_[2 * v] : node_[2 * v + 1];
    }
}

std::size_t RMaxTree1D::position(const Key1D& key) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || !(*it == key)) {
        throw std::out_of_range("key is not in the tree universe");
    }
    return static_cast<std::size_t>(it - keys_.begin());
}

void RMaxTree1D::set_leaf(std::size_t pos, std::int64_t value, bool keep_max) {
    const std::size_t n = keys_.size();
    TreeEntry& leaf = node_[n + pos];
    if (keep_max) {
        if (value <= leaf.value) return;
        leaf.value = value;
    } else {
        leaf.value = value;
    }
    for (std::size_t v = (n + pos) >> 1; v >= 1; v >>= 1) {
        node_[v] = better(node_[2 * v], node_[2 * v + 1]) ? node_[2 * v] : node_[2 * v + 1];
    }
}

void RMaxTree1D::update(const Key1D& key, std::int64_t value) {
    set_leaf(position(key), value, false);
}

void RMaxTree1D::upgrade(const Key1D& key, std::int64_t value) {
    set_leaf(position(key), value, true);
}

TreeEntry RMaxTree1D::range_max(std::int64_t lo, std::int64_t hi) const {
    TreeEntry best{};
    const std::size_t n = keys_.size();
    if (n == 0 || lo > hi) return best;
    constexpr std::int64_t tag_min = std::numeric_limits<std::int64_t>::min();
    constexpr std::int64_t tag_max = std::numeric_limits<std::int64_t>::max();
    std::size_t l = static_cast<std::size_t>(
        std::lower_bound(keys_.begin(), keys_.end(), Key1D{lo, tag_min}) - keys_.begin());
    std::size_t r = static_cast<std::size_t>(
        std::upper_bound(keys_.begin(), keys_.end(), Key1D{hi, tag_max}) - keys_.begin());
    for (l += n, r += n; l < r; l >>= 1, r >>= 1) {
        if (l & 1) {
            if (better(node_[l], best)) best = node_[l];
            ++l;
        }
        if (r & 1) {
            --r;
            if (better(node_[r], best)) best = node_[r];
        }
    }
    return best;
}

RMaxTree2D::RMaxTree2D(std::vector<Point2D> points, std::vector<std::int64_t> prefs)
    : points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (!prefs.empty() && prefs.size() != n) {
        throw std::invalid_argument("pref count does not match point count");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(points_[i] < points_[i + 1])) {
            throw std::invalid_argument("tree points must be sorted and distinct");
        }
    }
    {
        // (secondary, tag) pairs key the inner trees and must be distinct too
        std::vector<Key1D> sec;
        sec.reserve(n);
        for (const Point2D& p : points_) sec.push_back({p.secondary, p.tag});
        std::sort(sec.begin(), sec.end());
        if (std::adjacent_find(sec.begin(), sec.end()) != sec.end()) {
            throw std::invalid_argument("duplicate (secondary, tag) pair");
        }
    }
    if (n == 0) return;

    base_ = std::bit_ceil(n);
    std::vector<std::vector<Key1D>> keys(2 * base_);
    std::vector<std::vector<std::int64_t>> kp(2 * base_);
    for (std::size_t i = 0; i < n; ++i) {
        keys[base_ + i] = {Key1D{points_[i].secondary, points_[i].tag}};
        kp[base_ + i] = {prefs.empty() ? 0 : prefs[i]};
    }
    for (std::size_t v = base_ - 1; v >= 1; --v) {
        const auto& lk = keys[2 * v];
        const auto& rk = keys[2 * v + 1];
        if (lk.empty() && rk.empty()) continue;
        auto& mk = keys[v];
        auto& mp = kp[v];
        mk.reserve(lk.size() + rk.size());
        mp.reserve(lk.size() + rk.size());
        std::size_t i = 0, j = 0;
        while (i < lk.size() || j < rk.size()) {
            bool take_left = j == rk.size() || (i < lk.size() && lk[i] < rk[j]);
            if (take_left) {
                mk.push_back(lk[i]);
                mp.push_back(kp[2 * v][i]);
                ++i;
            } else {
                mk.push_back(rk[j]);
                mp.push_back(kp[2 * v + 1][j]);
                ++j;
            }
        }
    }
    inner_.resize(2 * base_);
    for (std::size_t v = 1; v < 2 * base_; ++v) {
        if (!keys[v].empty()) {
            inner_[v] = RMaxTree1D(std::move(keys[v]), std::move(kp[v]));
        }
    }
}

std::size_t RMaxTree2D::position(const Point2D& point) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), point);
    if (it == points_.end() || !(*it == point)) {
        throw std::out_of_range("point is not in the tree universe");
    }
    return static_cast<std::size_t>(it - points_.begin());
}

void RMaxTree2D::touch(const Point2D& point, std::int64_t value, bool keep_max) {
    const Key1D key{point.secondary, point.tag};
    for (std::size_t v = base_ + position(point); v >= 1; v >>= 1) {
        if (keep_max) {
            inner_[v].upgrade(key, value);
        } else {
            inner_[v].update(key, value);
        }
    }
}

void RMaxTree2D::update(const Point2D& point, std::int64_t value) {
    touch(point, value, false);
}

void RMaxTree2D::upgrade(const Point2D& point, std::int64_t value) {
    touch(point, value, true);
}

TreeEntry RMaxTree2D::range_max(std::int64_t plo, std::int64_t phi,
                                std::int64_t slo, std::int64_t shi) const {
    TreeEntry best{};
    const std::size_t n = points_.size();
    if (n == 0 || plo > phi || slo > shi) return best;
    constexpr std::int64_t k_min = std::numeric_limits<std::int64_t>::min();
    constexpr std::int64_t k_max = std::numeric_limits<std::int64_t>::max();
    std::size_t l = static_cast<std::size_t>(
        std::lower_bound(points_.begin(), points_.end(), Point2D{plo, k_min, k_min}) -
        points_.begin());
    std::size_t r = static_cast<std::size_t>(
        std::upper_bound(points_.begin(), points_.end(), Point2D{phi, k_max, k_max}) -
        points_.begin());
    for (l += base_, r += base_; l < r; l >>= 1, r >>= 1) {
        if (l & 1) {
            TreeEntry e = inner_[l].range_max(slo, shi);
            if (better(e, best)) best = e;
            ++l;
        }
        if (r & 1) {
            --r;
            TreeEntry e = inner_[r].range_max(slo, shi);
            if (better(e, best)) best = e;
        }
    }
    return best;
}

} // namespace ochain
