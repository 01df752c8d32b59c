#ifndef DSR_BITSET_HPP
#define DSR_BITSET_HPP

#include <cstdint>
#include <vector>

namespace dsr {

// Fixed-capacity dynamic bitset used for vertex sets on the search hot path.
class Bitset {
public:
    Bitset() : nbits_(0) {}
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool contains_all(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int nbits_;
    std::vector<uint64_t> words_;
};

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct WordsHash {
    size_t operator()(const std::vector<uint64_t>& w) const {
        uint64_t h = 0x2545f4914f6cdd1dull;
        for (auto x : w) h = mix64(h ^ x);
        return static_cast<size_t>(h);
    }
};

} // namespace dsr

#endif
