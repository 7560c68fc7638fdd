#include "hamfactor/path_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamfactor {

RoundBase::RoundBase(const CycleCover& cover, Vertex fixed, Vertex free)
    : comp_of_(cover.num_vertices(), -1), pos_of_(cover.num_vertices(), -1), near_(delete_edge(cover, fixed, free)) {
    std::vector<Vertex> path;
    const bool forward = cover.pred(fixed) == free;
    Vertex cur = fixed;
    do {
        path.push_back(cur);
        cur = forward ? cover.succ(cur) : cover.pred(cur);
    } while (cur != fixed);
    comps_.push_back(std::move(path));
    const int skip = cover.cycle_id(fixed);
    for (int c = 0; c < static_cast<int>(cover.num_cycles()); ++c)
        if (c != skip) comps_.push_back(cover.cycle_vertices(c));
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        for (std::size_t i = 0; i < comps_[c].size(); ++i) {
            comp_of_[static_cast<std::size_t>(comps_[c][i])] = static_cast<int>(c);
            pos_of_[static_cast<std::size_t>(comps_[c][i])] = static_cast<int>(i);
        }
    }
}

namespace {

using Pieces = std::vector<Piece>;

int wrap(long long p, std::size_t len) {
    const auto l = static_cast<long long>(len);
    return static_cast<int>(((p % l) + l) % l);
}

Vertex piece_vertex(const RoundBase& base, const Piece& p, std::size_t t) {
    const auto& c = base.component(p.comp);
    return c[static_cast<std::size_t>(wrap(p.start + static_cast<long long>(p.dir) * static_cast<long long>(t), c.size()))];
}

// Offset of base position `pos` inside p, or -1.
long long piece_offset(const RoundBase& base, const Piece& p, int pos) {
    const std::size_t l = base.component(p.comp).size();
    const int off = p.dir > 0 ? wrap(pos - p.start, l) : wrap(p.start - pos, l);
    return off < p.len ? off : -1;
}

std::size_t total(const Pieces& ps) {
    std::size_t s = 0;
    for (const auto& p : ps) s += static_cast<std::size_t>(p.len);
    return s;
}

Vertex vertex_at(const RoundBase& base, const Pieces& ps, std::size_t idx) {
    for (const auto& p : ps) {
        if (idx < static_cast<std::size_t>(p.len)) return piece_vertex(base, p, idx);
        idx -= static_cast<std::size_t>(p.len);
    }
    throw std::out_of_range("piece index");
}

// First k vertices and the rest.
std::pair<Pieces, Pieces> split_at(const RoundBase& base, const Pieces& ps, std::size_t k) {
    Pieces head, tail;
    for (const auto& p : ps) {
        const auto len = static_cast<std::size_t>(p.len);
        if (k >= len) {
            head.push_back(p);
            k -= len;
        } else if (k == 0) {
            tail.push_back(p);
        } else {
            const std::size_t l = base.component(p.comp).size();
            head.push_back({p.comp, p.start, static_cast<int>(k), p.dir});
            tail.push_back({p.comp, wrap(p.start + static_cast<long long>(p.dir) * static_cast<long long>(k), l),
                            static_cast<int>(len - k), p.dir});
            k = 0;
        }
    }
    return {std::move(head), std::move(tail)};
}

Pieces reversed_pieces(const RoundBase& base, const Pieces& ps) {
    Pieces out;
    out.reserve(ps.size());
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        const std::size_t l = base.component(it->comp).size();
        out.push_back({it->comp, wrap(it->start + static_cast<long long>(it->dir) * (it->len - 1), l), it->len, -it->dir});
    }
    return out;
}

void append(Pieces& a, const Pieces& b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<Vertex> expand(const RoundBase& base, const Pieces& ps) {
    std::vector<Vertex> out;
    out.reserve(total(ps));
    for (const auto& p : ps)
        for (std::size_t t = 0; t < static_cast<std::size_t>(p.len); ++t) out.push_back(piece_vertex(base, p, t));
    return out;
}

}  // namespace

PathState PathState::root(const RoundBase& base) {
    PathState s;
    const auto& path = base.component(0);
    s.path_.push_back({0, 0, static_cast<int>(path.size()), 1});
    s.path_size_ = path.size();
    s.fixed_ = path.front();
    s.free_ = path.back();
    return s;
}

PathState::Location PathState::locate(const RoundBase& base, Vertex w) const {
    const int comp = base.comp_of(w);
    const int pos = base.pos_of(w);
    Location loc;
    auto find_in = [&](const Pieces& ps, std::size_t& offset) {
        std::size_t acc = 0;
        for (const auto& p : ps) {
            if (p.comp == comp) {
                const long long off = piece_offset(base, p, pos);
                if (off >= 0) {
                    offset = acc + static_cast<std::size_t>(off);
                    return true;
                }
            }
            acc += static_cast<std::size_t>(p.len);
        }
        return false;
    };
    if (find_in(path_, loc.offset)) {
        loc.where = Where::path;
        loc.size = path_size_;
        if (loc.offset > 0) loc.prev = vertex_at(base, path_, loc.offset - 1);
        if (loc.offset + 1 < path_size_) loc.next = vertex_at(base, path_, loc.offset + 1);
        return loc;
    }
    for (std::size_t i = 0; i < new_cycles_.size(); ++i) {
        if (find_in(new_cycles_[i], loc.offset)) {
            loc.where = Where::new_cycle;
            loc.index = i;
            loc.size = total(new_cycles_[i]);
            loc.prev = vertex_at(base, new_cycles_[i], (loc.offset + loc.size - 1) % loc.size);
            loc.next = vertex_at(base, new_cycles_[i], (loc.offset + 1) % loc.size);
            return loc;
        }
    }
    // Untouched base cycle (component 0 is always covered by path or new cycles).
    const auto& c = base.component(comp);
    loc.where = Where::base_cycle;
    loc.index = static_cast<std::size_t>(comp);
    loc.offset = static_cast<std::size_t>(pos);
    loc.size = c.size();
    loc.prev = c[static_cast<std::size_t>(wrap(pos - 1, c.size()))];
    loc.next = c[static_cast<std::size_t>(wrap(pos + 1, c.size()))];
    return loc;
}

RotationEffect PathState::classify(const RoundBase& base, const RotationRecord& r) const {
    RotationEffect e;
    if (r.v != free_ || r.w == r.v || r.w < 0 || static_cast<std::size_t>(r.w) >= base.num_vertices()) return e;
    const Location loc = locate(base, r.w);
    if (r.x == kNoVertex || (r.x != loc.prev && r.x != loc.next)) return e;
    if (loc.where != Where::path) {
        e.kind = RotationKind::absorb;
        e.path_size = path_size_ + loc.size;
        return e;
    }
    const std::size_t last = path_size_ - 1;
    if (loc.offset >= last - 1) return e;  // w == v or {v, w} already an edge
    if (r.x == loc.next) {
        e.kind = RotationKind::pivot;
        e.path_size = path_size_;
        return e;
    }
    if (loc.offset < 2) return e;  // would leave fewer than two path vertices
    e.kind = RotationKind::split;
    e.path_size = loc.offset;
    e.new_cycle_size = path_size_ - loc.offset;
    return e;
}

PathState PathState::rotated(const RoundBase& base, const RotationRecord& r) const {
    const RotationEffect e = classify(base, r);
    if (e.kind == RotationKind::invalid) throw std::logic_error("invalid rotation");
    const Location loc = locate(base, r.w);
    PathState s = *this;
    switch (e.kind) {
        case RotationKind::absorb:
            if (loc.where == Where::base_cycle) {
                const int comp = static_cast<int>(loc.index);
                const int dir = r.x == loc.next ? -1 : 1;
                s.path_.push_back({comp, static_cast<int>(loc.offset), static_cast<int>(loc.size), dir});
                s.absorbed_.push_back(comp);
            } else {
                auto [a, b] = split_at(base, new_cycles_[loc.index], loc.offset);
                Pieces fwd = std::move(b);  // w, next(w), ..., prev(w)
                append(fwd, a);
                if (r.x == loc.prev) {
                    append(s.path_, fwd);
                } else {
                    auto [wp, rest] = split_at(base, fwd, 1);
                    append(s.path_, wp);
                    append(s.path_, reversed_pieces(base, rest));
                }
                s.new_cycles_.erase(s.new_cycles_.begin() + static_cast<std::ptrdiff_t>(loc.index));
            }
            break;
        case RotationKind::pivot: {
            auto [head, tail] = split_at(base, path_, loc.offset + 1);
            s.path_ = std::move(head);
            append(s.path_, reversed_pieces(base, tail));
            break;
        }
        case RotationKind::split: {
            auto [head, tail] = split_at(base, path_, loc.offset);
            s.path_ = std::move(head);
            s.new_cycles_.push_back(std::move(tail));
            break;
        }
        case RotationKind::invalid:
            break;
    }
    s.path_size_ = e.path_size;
    s.free_ = r.x;
    return s;
}

PathState PathState::reversed(const RoundBase& base) const {
    PathState s = *this;
    s.path_ = reversed_pieces(base, path_);
    std::swap(s.fixed_, s.free_);
    return s;
}

PathState::Neighborhood PathState::neighborhood(const RoundBase& base, Vertex w) const {
    const Location loc = locate(base, w);
    return {loc.where == Where::path, loc.size, loc.prev, loc.next};
}

std::vector<Vertex> PathState::path_vertices(const RoundBase& base) const { return expand(base, path_); }

std::vector<std::vector<Vertex>> PathState::new_cycle_vertices(const RoundBase& base) const {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : new_cycles_) out.push_back(expand(base, c));
    return out;
}

bool is_acceptable(const RotationEffect& effect, std::size_t path_size_before, std::size_t n0) {
    switch (effect.kind) {
        case RotationKind::invalid:
            return false;
        case RotationKind::absorb:
        case RotationKind::pivot:
            return true;
        case RotationKind::split:
            return effect.new_cycle_size >= n0 && (path_size_before < n0 || effect.path_size >= n0);
    }
    return false;
}

}  // namespace hamfactor
