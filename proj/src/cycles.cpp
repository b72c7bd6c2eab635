#include "linkcert/cycles.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "linkcert/errors.hpp"

namespace linkcert {

OrientedCycle::OrientedCycle(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    if (verts_.size() < 3)
        throw PreconditionError("cycle needs at least 3 vertices");
    std::unordered_set<Vertex> seen(verts_.begin(), verts_.end());
    if (seen.size() != verts_.size())
        throw PreconditionError("cycle vertices must be distinct: " + to_string());
}

Vertex OrientedCycle::at(int i) const {
    const int n = size();
    int r = i % n;
    if (r < 0) r += n;
    return verts_[r];
}

bool OrientedCycle::contains(Vertex v) const {
    return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

bool OrientedCycle::disjoint_from(const OrientedCycle& other) const {
    for (Vertex v : verts_)
        if (other.contains(v)) return false;
    return true;
}

OrientedCycle OrientedCycle::reversed() const {
    std::vector<Vertex> r(verts_.rbegin(), verts_.rend());
    return OrientedCycle(std::move(r));
}

OrientedCycle OrientedCycle::canonical() const {
    const int n = size();
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (verts_[i] < verts_[best]) best = i;
    std::vector<Vertex> out;
    out.reserve(n);
    const Vertex next = at(best + 1), prev = at(best - 1);
    if (next <= prev) {
        for (int i = 0; i < n; ++i) out.push_back(at(best + i));
    } else {
        for (int i = 0; i < n; ++i) out.push_back(at(best - i));
    }
    return OrientedCycle(std::move(out));
}

std::vector<Vertex> OrientedCycle::arc(int i, int j) const {
    const int n = size();
    std::vector<Vertex> out;
    int k = ((i % n) + n) % n;
    const int stop = ((j % n) + n) % n;
    out.push_back(verts_[k]);
    while (k != stop) {
        k = (k + 1) % n;
        out.push_back(verts_[k]);
    }
    return out;
}

std::string OrientedCycle::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(verts_[i]);
    }
    return s + "]";
}

void OrientedChain::add_edge(Vertex u, Vertex v, long long mult) {
    if (u == v) throw PreconditionError("chain edge endpoints must differ");
    if (mult == 0) return;
    const bool flip = u > v;
    const auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
    auto it = mult_.find(key);
    const long long add = flip ? -mult : mult;
    if (it == mult_.end()) {
        mult_.emplace(key, add);
    } else {
        it->second += add;
        if (it->second == 0) mult_.erase(it);
    }
}

OrientedChain OrientedChain::of_cycle(const OrientedCycle& c) {
    OrientedChain ch;
    for (int i = 0; i < c.size(); ++i)
        ch.add_edge(c.at(i), c.at(i + 1));
    return ch;
}

OrientedChain& OrientedChain::operator+=(const OrientedChain& o) {
    for (const auto& [key, m] : o.mult_)
        add_edge(key.first, key.second, m);
    return *this;
}

long long OrientedChain::multiplicity(Vertex u, Vertex v) const {
    const bool flip = u > v;
    const auto key = flip ? std::make_pair(v, u) : std::make_pair(u, v);
    auto it = mult_.find(key);
    if (it == mult_.end()) return 0;
    return flip ? -it->second : it->second;
}

std::optional<OrientedCycle> OrientedChain::as_simple_cycle(std::string* why) const {
    auto fail = [&](const std::string& msg) -> std::optional<OrientedCycle> {
        if (why) *why = "not a simple cycle: " + msg;
        return std::nullopt;
    };
    if (mult_.empty()) return fail("empty chain");

    std::unordered_map<Vertex, Vertex> succ;
    std::unordered_map<Vertex, int> indeg;
    for (const auto& [key, m] : mult_) {
        if (m != 1 && m != -1) return fail("edge multiplicity outside {-1,0,1}");
        const Vertex from = m == 1 ? key.first : key.second;
        const Vertex to = m == 1 ? key.second : key.first;
        if (succ.count(from)) return fail("vertex " + std::to_string(from) + " has out-degree > 1");
        succ[from] = to;
        ++indeg[to];
    }
    for (const auto& [v, d] : indeg)
        if (d != 1) return fail("vertex " + std::to_string(v) + " has in-degree " + std::to_string(d));
    if (succ.size() != indeg.size()) return fail("in/out degree mismatch");

    Vertex start = succ.begin()->first;
    for (const auto& [v, _] : succ) start = std::min(start, v);
    std::vector<Vertex> verts;
    Vertex cur = start;
    do {
        verts.push_back(cur);
        auto it = succ.find(cur);
        if (it == succ.end()) return fail("walk left the support");
        cur = it->second;
    } while (cur != start && verts.size() <= succ.size());
    if (verts.size() != succ.size()) return fail("support is disconnected");
    if (verts.size() < 3) return fail("support shorter than 3");
    return OrientedCycle(std::move(verts));
}

OrientedChain chain_of(const OrientedCycle& c) { return OrientedChain::of_cycle(c); }

OrientedChain chain_add(const OrientedChain& a, const OrientedChain& b) { return a + b; }

OrientedCycle fuse_cycles(std::span<const OrientedCycle> parts) {
    OrientedChain sum;
    for (const auto& c : parts) sum += chain_of(c);
    std::string why;
    auto fused = sum.as_simple_cycle(&why);
    if (!fused) {
        std::string detail = "fusion failed (" + why + ") over";
        for (const auto& c : parts) detail += " " + c.to_string();
        throw InternalCheckError(detail);
    }
    return *fused;
}

}  // namespace linkcert
