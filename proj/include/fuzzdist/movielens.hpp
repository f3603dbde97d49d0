// Copyright 2026 The fuzzdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzdist/errors.hpp"
#include "fuzzdist/histogram.hpp"

namespace fuzzdist {

/// One line of the MovieLens ratings file.
struct RatingRecord {
    int user_id = 0;
    int item_id = 0;
    int rating = 0;
    std::int64_t timestamp = 0;
};

namespace detail {

inline bool parse_int(std::string_view text, std::int64_t& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && !text.empty();
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
}

inline void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace detail

/// The dataset predates UTF-8; titles arrive as Latin-1 bytes.
inline std::string latin1_to_utf8(std::string_view latin1) {
    std::string out;
    out.reserve(latin1.size());
    for (unsigned char c : latin1) {
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back(static_cast<char>(0xC0 | (c >> 6)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        }
    }
    return out;
}

/// Parses tab-separated `user item rating timestamp` lines. Malformed lines
/// and ratings outside 1..5 raise errors carrying the line number.
inline std::vector<RatingRecord> parse_ratings(std::istream& in) {
    std::vector<RatingRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        const auto fields = detail::split(line, '\t');
        std::int64_t user = 0, item = 0, rating = 0, timestamp = 0;
        if (fields.size() != 4 || !detail::parse_int(fields[0], user) ||
            !detail::parse_int(fields[1], item) || !detail::parse_int(fields[2], rating) ||
            !detail::parse_int(fields[3], timestamp))
            throw ParseError("malformed ratings line", line_no);
        if (rating < 1 || rating > 5)
            throw RatingOutOfRangeError("rating " + std::to_string(rating) + " outside 1..5",
                                        line_no);
        records.push_back({static_cast<int>(user), static_cast<int>(item),
                           static_cast<int>(rating), timestamp});
    }
    return records;
}

/// Parses pipe-separated `id|title|...` lines into an id -> title map.
/// Duplicate ids raise DuplicateItemError.
inline std::map<int, std::string> parse_titles(std::istream& in) {
    std::map<int, std::string> titles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        detail::strip_cr(line);
        const auto fields = detail::split(line, '|');
        std::int64_t id = 0;
        if (fields.size() < 2 || !detail::parse_int(fields[0], id))
            throw ParseError("malformed item line", line_no);
        const auto [it, inserted] = titles.emplace(static_cast<int>(id),
                                                   latin1_to_utf8(fields[1]));
        if (!inserted)
            throw DuplicateItemError("duplicate item id " + std::to_string(id), line_no);
    }
    return titles;
}

/// Tallies the ratings of one item. Raises UnknownItemError when no record
/// mentions the item.
inline RatingHistogram build_histogram(std::span<const RatingRecord> records, int item_id,
                                       std::string title) {
    RatingHistogram hist;
    hist.item_id = item_id;
    hist.title = std::move(title);
    bool seen = false;
    for (const auto& rec : records) {
        if (rec.item_id != item_id) continue;
        ++hist.counts[rec.rating - 1];
        seen = true;
    }
    if (!seen)
        throw UnknownItemError("no ratings for item " + std::to_string(item_id));
    return hist;
}

struct MovieLens {
    std::vector<RatingRecord> ratings;
    std::map<int, std::string> titles;
};

inline MovieLens load_movielens(const std::filesystem::path& dir) {
    const auto data_path = dir / "u.data";
    const auto item_path = dir / "u.item";
    std::ifstream data(data_path);
    if (!data)
        throw DataError("cannot open " + data_path.string() +
                        "; fetch the dataset with scripts/fetch_movielens.sh");
    std::ifstream items(item_path);
    if (!items)
        throw DataError("cannot open " + item_path.string() +
                        "; fetch the dataset with scripts/fetch_movielens.sh");
    return {parse_ratings(data), parse_titles(items)};
}

/// Finds an item by title: exact match first, then a unique case-insensitive
/// substring match. Anything else raises UnknownItemError listing the
/// closest candidates.
inline int resolve_title(const std::map<int, std::string>& titles, const std::string& query) {
    for (const auto& [id, title] : titles)
        if (title == query) return id;

    auto lower = [](std::string s) {
        for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    const std::string needle = lower(query);
    std::vector<std::pair<int, std::string>> near;
    for (const auto& [id, title] : titles)
        if (lower(title).find(needle) != std::string::npos) near.emplace_back(id, title);
    if (near.size() == 1) return near.front().first;

    std::string msg = "no item titled \"" + query + "\"";
    if (!near.empty()) {
        msg += "; close matches:";
        for (std::size_t i = 0; i < near.size() && i < 5; ++i)
            msg += " \"" + near[i].second + "\"";
    }
    throw UnknownItemError(msg);
}

/// Histogram of the item resolved from `query`.
inline RatingHistogram histogram_for_title(const MovieLens& data, const std::string& query) {
    const int id = resolve_title(data.titles, query);
    return build_histogram(data.ratings, id, data.titles.at(id));
}

}  // namespace fuzzdist
