#ifndef DIGDOM_VERTEX_SET_HPP
#define DIGDOM_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace digdom {

using Vertex = std::uint32_t;

/// Subset of {0, ..., n-1}. Used for every candidate, witness and
/// certificate set in the library.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe_size);

    /// Throws Error(invalid_argument) if a member is >= universe_size.
    static VertexSet from_members(std::size_t universe_size, std::span<const Vertex> members);
    static VertexSet from_members(std::size_t universe_size, std::initializer_list<Vertex> members);
    static VertexSet full(std::size_t universe_size);
    /// Bit i of `mask` is vertex i. Requires universe_size <= 64.
    static VertexSet from_mask(std::size_t universe_size, std::uint64_t mask);

    std::size_t universe_size() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const noexcept { return v < bits_.size() && bits_[v]; }
    void insert(Vertex v);
    void erase(Vertex v);

    /// Sorted ascending.
    std::vector<Vertex> members() const;
    std::uint64_t to_mask() const;

    /// "{0,2,5}"
    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

} // namespace digdom

#endif // DIGDOM_VERTEX_SET_HPP
