#include "digdom/vertex_set.hpp"

#include "digdom/error.hpp"

#include <sstream>

namespace digdom {

VertexSet::VertexSet(std::size_t universe_size) : bits_(universe_size, false) {}

VertexSet VertexSet::from_members(std::size_t universe_size, std::span<const Vertex> members) {
    VertexSet s(universe_size);
    for (Vertex v : members) {
        if (v >= universe_size) {
            throw Error(ErrorCode::invalid_argument,
                        "vertex " + std::to_string(v) + " is not in 0.." +
                            std::to_string(universe_size) + "-1");
        }
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::from_members(std::size_t universe_size, std::initializer_list<Vertex> members) {
    return from_members(universe_size, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::full(std::size_t universe_size) {
    VertexSet s(universe_size);
    s.bits_.assign(universe_size, true);
    s.count_ = universe_size;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe_size, std::uint64_t mask) {
    if (universe_size > 64) {
        throw Error(ErrorCode::invalid_argument, "mask conversion needs universe_size <= 64");
    }
    VertexSet s(universe_size);
    for (std::size_t v = 0; v < universe_size; ++v) {
        if ((mask >> v) & 1u) s.insert(static_cast<Vertex>(v));
    }
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= bits_.size()) {
        throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    }
    if (!bits_[v]) {
        bits_[v] = true;
        ++count_;
    }
}

void VertexSet::erase(Vertex v) {
    if (v < bits_.size() && bits_[v]) {
        bits_[v] = false;
        --count_;
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (bits_.size() > 64) {
        throw Error(ErrorCode::invalid_argument, "mask conversion needs universe_size <= 64");
    }
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v]) mask |= std::uint64_t{1} << v;
    }
    return mask;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : members()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace digdom
