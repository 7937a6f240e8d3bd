#pragma once

#include <concepts>
#include <cstddef>
#include <iterator>
#include <optional>
#include <utility>

namespace narcissus {

/// A generator is anything with `std::optional<T> next()` that returns
/// nullopt once exhausted.
template <class G>
concept Generator = requires(G g) {
    { g.next() } -> std::same_as<std::optional<typename G::value_type>>;
};

/// Single-pass input range over a generator. Items are produced lazily, one
/// per increment; nothing is buffered beyond the current item.
template <Generator G>
class Stream {
public:
    using value_type = typename G::value_type;

    explicit Stream(G generator) : generator_(std::move(generator)) {}

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = typename G::value_type;
        using difference_type = std::ptrdiff_t;
        using reference = const value_type&;
        using pointer = const value_type*;

        iterator() = default;
        explicit iterator(G* generator) : generator_(generator) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }

        iterator& operator++() {
            current_ = generator_->next();
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_.has_value(); }

    private:
        G* generator_ = nullptr;
        std::optional<value_type> current_;
    };

    iterator begin() { return iterator(&generator_); }
    std::default_sentinel_t end() { return {}; }

    std::optional<value_type> next() { return generator_.next(); }

    /// Drains the stream; for tests and verification only.
    std::size_t count() {
        std::size_t total = 0;
        while (generator_.next()) ++total;
        return total;
    }

private:
    G generator_;
};

}  // namespace narcissus
