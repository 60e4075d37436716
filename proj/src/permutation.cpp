#include <twinwidth/permutation.hpp>
#include <twinwidth/errors.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twinwidth {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || static_cast<std::size_t>(v) > image_.size() || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidArgument("not a permutation of {1.." + std::to_string(image_.size()) + "}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(std::size_t p)
{
    std::vector<int> image(p);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text)
{
    std::string buffer(text);
    std::replace(buffer.begin(), buffer.end(), ',', ' ');
    std::istringstream in(buffer);
    std::vector<int> image;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size())
                throw ParseError("bad permutation entry '" + token + "'");
            image.push_back(v);
        }
        catch (const std::logic_error&) {
            throw ParseError("bad permutation entry '" + token + "'");
        }
    }
    return Permutation(std::move(image));
}

std::vector<Permutation> Permutation::all(std::size_t p)
{
    std::vector<int> image(p);
    std::iota(image.begin(), image.end(), 1);
    std::vector<Permutation> result;
    do
        result.emplace_back(image);
    while (std::next_permutation(image.begin(), image.end()));
    return result;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::complement() const
{
    std::vector<int> out(image_.size());
    const int p = static_cast<int>(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        out[i] = p + 1 - image_[i];
    return Permutation(std::move(out));
}

Permutation Permutation::reverse() const
{
    std::vector<int> out(image_.rbegin(), image_.rend());
    return Permutation(std::move(out));
}

namespace {
    bool extend_pattern(const std::vector<int>& text, const std::vector<int>& pattern, std::size_t from,
                        std::vector<int>& chosen)
    {
        const std::size_t k = chosen.size();
        if (k == pattern.size())
            return true;
        if (text.size() - from < pattern.size() - k)
            return false;
        for (std::size_t i = from; i < text.size(); ++i) {
            // relative order of the new value against all chosen ones must match
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a) {
                bool text_less = text[static_cast<std::size_t>(chosen[a])] < text[i];
                bool pattern_less = pattern[a] < pattern[k];
                ok = text_less == pattern_less;
            }
            if (! ok)
                continue;
            chosen.push_back(static_cast<int>(i));
            if (extend_pattern(text, pattern, i + 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }
}

bool Permutation::contains_pattern(const Permutation& pattern, std::vector<int>* positions) const
{
    std::vector<int> chosen;
    if (! extend_pattern(image_, pattern.image_, 0, chosen))
        return false;
    if (positions) {
        positions->clear();
        for (int c : chosen)
            positions->push_back(c + 1);
    }
    return true;
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(image_[i]);
    }
    return out;
}

Permutation permutation_from_orders(const std::vector<std::size_t>& order1, const std::vector<std::size_t>& order2)
{
    if (order1.size() != order2.size())
        throw InvalidArgument("orders over sets of different size");
    std::vector<int> rank1(order1.size(), -1);
    for (std::size_t i = 0; i < order1.size(); ++i) {
        if (order1[i] >= order1.size() || rank1[order1[i]] != -1)
            throw InvalidArgument("order1 is not a linear order on {0..n-1}");
        rank1[order1[i]] = static_cast<int>(i);
    }
    std::vector<int> image;
    image.reserve(order2.size());
    for (std::size_t e : order2) {
        if (e >= rank1.size())
            throw InvalidArgument("order2 is not a linear order on {0..n-1}");
        image.push_back(rank1[e] + 1);
    }
    return Permutation(std::move(image));
}

} // namespace twinwidth
