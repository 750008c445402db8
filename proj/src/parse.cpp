#include "geobench/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace geobench {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_word_char(char c) {
    return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool match_word(std::string_view text, std::size_t i, std::string_view word) {
    if (i + word.size() > text.size()) return false;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (lower(text[i + k]) != word[k]) return false;
    }
    if (i > 0 && is_word_char(text[i - 1])) return false;
    std::size_t end = i + word.size();
    return end == text.size() || !is_word_char(text[end]);
}

std::size_t skip_spaces(std::string_view text, std::size_t i) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' ||
                               text[i] == '\n')) {
        ++i;
    }
    return i;
}

// Separators tolerated between a label and its value: whitespace, colon,
// equals, markdown emphasis. Bounded so a label never grabs a distant number.
std::size_t skip_label_separators(std::string_view text, std::size_t i) {
    std::size_t limit = i + 12;
    while (i < text.size() && i < limit) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ':' || c == '=' ||
            c == '*' || c == '_') {
            ++i;
        } else {
            break;
        }
    }
    return i;
}

struct NumberToken {
    double value = 0.0;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool negative = false;
};

// Signed decimal: [+-]? digits [. digits]; also accepts U+2212 as minus.
// Rejects tokens that look like version fragments ("1.2.3").
std::optional<NumberToken> scan_number(std::string_view text, std::size_t i) {
    NumberToken tok;
    tok.begin = i;
    std::size_t p = i;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) {
        tok.negative = text[p] == '-';
        ++p;
    } else if (p + 2 < text.size() && static_cast<unsigned char>(text[p]) == 0xE2 &&
               static_cast<unsigned char>(text[p + 1]) == 0x88 &&
               static_cast<unsigned char>(text[p + 2]) == 0x92) {
        tok.negative = true;
        p += 3;
    }
    std::size_t digits_begin = p;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == digits_begin) return std::nullopt;
    if (p < text.size() && text[p] == '.') {
        if (p + 1 < text.size() && is_digit(text[p + 1])) {
            ++p;
            while (p < text.size() && is_digit(text[p])) ++p;
        }
    }
    if (p < text.size() && text[p] == '.' && p + 1 < text.size() && is_digit(text[p + 1])) {
        return std::nullopt;  // 1.2.3
    }
    double magnitude = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + digits_begin, text.data() + p, magnitude);
    if (ec != std::errc{} || ptr != text.data() + p) return std::nullopt;
    tok.value = tok.negative ? -magnitude : magnitude;
    tok.end = p;
    return tok;
}

bool number_can_start_here(std::string_view text, std::size_t i) {
    if (i == 0) return true;
    char prev = text[i - 1];
    return !(is_word_char(prev) || prev == '.' || prev == '+' || prev == '-');
}

struct Candidate {
    double lat = 0.0;
    double lon = 0.0;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool in_range = false;
    int tier = 0;
};

bool pair_in_range(double lat, double lon) {
    return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 && lat <= 90.0 &&
           lon >= -180.0 && lon <= 180.0;
}

// "lat, lon" or "lat lon" immediately after position i.
struct ScannedPair {
    NumberToken first;
    NumberToken second;
};
std::optional<ScannedPair> scan_pair(std::string_view text, std::size_t i) {
    auto first = scan_number(text, i);
    if (!first) return std::nullopt;
    std::size_t p = skip_spaces(text, first->end);
    bool saw_comma = false;
    if (p < text.size() && text[p] == ',') {
        saw_comma = true;
        p = skip_spaces(text, p + 1);
    }
    if (!saw_comma && p == first->end) return std::nullopt;  // "12.5-0.3" etc.
    auto second = scan_number(text, p);
    if (!second) return std::nullopt;
    return ScannedPair{*first, *second};
}

// ---- labeled tier ----------------------------------------------------------

void collect_labeled(std::string_view text, std::vector<Candidate>& out) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!match_word(text, i, "latitude")) continue;
        std::size_t after = i + 8;
        std::size_t k = skip_spaces(text, after);
        std::size_t marker_end = 0;
        if (match_word(text, k, "and")) {
            std::size_t k2 = skip_spaces(text, k + 3);
            if (match_word(text, k2, "longitude")) marker_end = k2 + 9;
        } else if (k < text.size() && text[k] == '/') {
            std::size_t k2 = skip_spaces(text, k + 1);
            if (match_word(text, k2, "longitude")) marker_end = k2 + 9;
        }

        if (marker_end != 0) {
            std::size_t p = skip_label_separators(text, marker_end);
            if (auto pair = scan_pair(text, p)) {
                Candidate c;
                c.lat = pair->first.value;
                c.lon = pair->second.value;
                c.begin = i;
                c.end = pair->second.end;
                c.in_range = pair_in_range(c.lat, c.lon);
                c.tier = 1;
                out.push_back(c);
                i = c.end - 1;
            } else {
                i = marker_end - 1;
            }
            continue;
        }

        // Split form: "Latitude: <num> ... Longitude: <num>" within a short window.
        std::size_t p = skip_label_separators(text, after);
        auto latnum = scan_number(text, p);
        if (!latnum) continue;
        std::size_t window_end = std::min(text.size(), latnum->end + 60);
        for (std::size_t q = latnum->end; q < window_end; ++q) {
            if (!match_word(text, q, "longitude")) continue;
            std::size_t vp = skip_label_separators(text, q + 9);
            auto lonnum = scan_number(text, vp);
            if (!lonnum) break;
            Candidate c;
            c.lat = latnum->value;
            c.lon = lonnum->value;
            c.begin = i;
            c.end = lonnum->end;
            c.in_range = pair_in_range(c.lat, c.lon);
            c.tier = 1;
            out.push_back(c);
            i = c.end - 1;
            break;
        }
    }
}

// ---- bare decimal tier -----------------------------------------------------

void collect_bare_pairs(std::string_view text, const std::vector<Candidate>& labeled,
                        std::vector<Candidate>& out) {
    auto inside_labeled = [&](std::size_t b, std::size_t e) {
        for (const Candidate& c : labeled) {
            if (b >= c.begin && e <= c.end) return true;
        }
        return false;
    };
    std::size_t i = 0;
    while (i < text.size()) {
        if (!number_can_start_here(text, i)) {
            ++i;
            continue;
        }
        auto first = scan_number(text, i);
        if (!first) {
            ++i;
            continue;
        }
        std::size_t p = skip_spaces(text, first->end);
        if (p < text.size() && text[p] == ',') {
            p = skip_spaces(text, p + 1);
            auto second = scan_number(text, p);
            if (second) {
                if (!inside_labeled(first->begin, second->end)) {
                    Candidate c;
                    c.lat = first->value;
                    c.lon = second->value;
                    c.begin = first->begin;
                    c.end = second->end;
                    c.in_range = pair_in_range(c.lat, c.lon);
                    c.tier = 2;
                    out.push_back(c);
                }
                i = second->end;
                continue;
            }
        }
        i = first->end;
    }
}

// ---- DMS tier ---------------------------------------------------------------

bool match_symbol(std::string_view text, std::size_t i, std::string_view utf8,
                  std::size_t& consumed) {
    if (text.substr(i, utf8.size()) == utf8) {
        consumed = utf8.size();
        return true;
    }
    return false;
}

bool degree_symbol(std::string_view text, std::size_t i, std::size_t& consumed) {
    if (match_symbol(text, i, "\xC2\xB0", consumed)) return true;  // U+00B0
    if (i < text.size() && (text[i] == 'd' || text[i] == 'D') &&
        (i + 1 == text.size() || !is_word_char(text[i + 1]))) {
        consumed = 1;
        return true;
    }
    return false;
}

bool minute_symbol(std::string_view text, std::size_t i, std::size_t& consumed) {
    if (match_symbol(text, i, "\xE2\x80\xB2", consumed)) return true;  // U+2032
    if (match_symbol(text, i, "\xE2\x80\x99", consumed)) return true;  // U+2019
    if (i < text.size() && text[i] == '\'') {
        consumed = 1;
        return true;
    }
    return false;
}

bool second_symbol(std::string_view text, std::size_t i, std::size_t& consumed) {
    if (match_symbol(text, i, "\xE2\x80\xB3", consumed)) return true;  // U+2033
    if (match_symbol(text, i, "\xE2\x80\x9D", consumed)) return true;  // U+201D
    if (i + 1 < text.size() && text[i] == '\'' && text[i + 1] == '\'') {
        consumed = 2;
        return true;
    }
    if (i < text.size() && text[i] == '"') {
        consumed = 1;
        return true;
    }
    return false;
}

struct DmsToken {
    double degrees = 0.0;  // signed decimal degrees
    bool is_latitude = false;
    bool components_valid = false;
    std::size_t begin = 0;
    std::size_t end = 0;
};

std::optional<DmsToken> scan_dms(std::string_view text, std::size_t i) {
    if (!number_can_start_here(text, i)) return std::nullopt;
    auto deg = scan_number(text, i);
    if (!deg || deg->negative) return std::nullopt;
    std::size_t consumed = 0;
    std::size_t p = deg->end;
    if (!degree_symbol(text, p, consumed)) return std::nullopt;
    p += consumed;

    double minutes = 0.0, seconds = 0.0;
    std::size_t q = skip_spaces(text, p);
    if (auto mins = scan_number(text, q); mins && !mins->negative) {
        std::size_t after = mins->end;
        if (minute_symbol(text, after, consumed)) {
            minutes = mins->value;
            p = after + consumed;
            q = skip_spaces(text, p);
            if (auto secs = scan_number(text, q); secs && !secs->negative) {
                std::size_t after2 = secs->end;
                if (second_symbol(text, after2, consumed)) {
                    seconds = secs->value;
                    p = after2 + consumed;
                }
            }
        }
    }

    std::size_t h = skip_spaces(text, p);
    if (h >= text.size()) return std::nullopt;
    char hemi = lower(text[h]);
    if (hemi != 'n' && hemi != 's' && hemi != 'e' && hemi != 'w') return std::nullopt;
    if (h + 1 < text.size() && is_word_char(text[h + 1])) return std::nullopt;

    DmsToken tok;
    tok.is_latitude = hemi == 'n' || hemi == 's';
    tok.components_valid = minutes >= 0.0 && minutes < 60.0 && seconds >= 0.0 && seconds < 60.0;
    double value = deg->value + minutes / 60.0 + seconds / 3600.0;
    tok.degrees = (hemi == 's' || hemi == 'w') ? -value : value;
    tok.begin = i;
    tok.end = h + 1;
    return tok;
}

void collect_dms_pairs(std::string_view text, std::vector<Candidate>& out) {
    std::vector<DmsToken> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (auto tok = scan_dms(text, i)) {
            tokens.push_back(*tok);
            i = tok->end;
        } else {
            ++i;
        }
    }
    for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
        const DmsToken& a = tokens[t];
        const DmsToken& b = tokens[t + 1];
        if (!a.is_latitude || b.is_latitude) continue;
        bool adjacent = true;
        for (std::size_t k = a.end; k < b.begin; ++k) {
            char c = text[k];
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n' && c != ',' && c != ';') {
                adjacent = false;
                break;
            }
        }
        if (!adjacent || b.begin - a.end > 8) continue;
        Candidate c;
        c.lat = a.degrees;
        c.lon = b.degrees;
        c.begin = a.begin;
        c.end = b.end;
        c.in_range = a.components_valid && b.components_valid && pair_in_range(c.lat, c.lon);
        c.tier = 3;
        out.push_back(c);
        ++t;
    }
}

ParseResult select_winner(const std::vector<Candidate>& candidates) {
    ParseResult result;
    for (int tier = 1; tier <= 3; ++tier) {
        const Candidate* winner = nullptr;
        int valid_count = 0;
        for (const Candidate& c : candidates) {
            if (c.tier != tier || !c.in_range) continue;
            ++valid_count;
            winner = &c;
        }
        if (winner != nullptr) {
            auto coord = GeoCoordinate::try_make(winner->lat, winner->lon);
            if (coord) {
                result.status = valid_count > 1 ? ParseStatus::AmbiguousResolved
                                                : ParseStatus::Ok;
                result.coordinate = coord;
                result.span_begin = winner->begin;
                result.span_end = winner->end;
                result.candidates_found = valid_count;
                return result;
            }
        }
    }
    int rejected = 0;
    const Candidate* last_rejected = nullptr;
    for (const Candidate& c : candidates) {
        if (!c.in_range) {
            ++rejected;
            last_rejected = &c;
        }
    }
    if (rejected > 0) {
        result.status = ParseStatus::OutOfRange;
        result.candidates_found = rejected;
        result.span_begin = last_rejected->begin;
        result.span_end = last_rejected->end;
    }
    return result;
}

}  // namespace

ParseResult parse_coordinates(std::string_view text) noexcept {
    try {
        std::vector<Candidate> candidates;
        collect_labeled(text, candidates);
        std::vector<Candidate> labeled = candidates;
        collect_bare_pairs(text, labeled, candidates);
        collect_dms_pairs(text, candidates);
        return select_winner(candidates);
    } catch (...) {
        return ParseResult{};
    }
}

double dms_to_decimal(int degrees, int minutes, double seconds, char hemisphere) {
    if (degrees < 0) throw std::invalid_argument("degrees must be non-negative");
    if (minutes < 0 || minutes >= 60) throw std::invalid_argument("minutes out of [0, 60)");
    if (!(seconds >= 0.0) || seconds >= 60.0) {
        throw std::invalid_argument("seconds out of [0, 60)");
    }
    double value = degrees + minutes / 60.0 + seconds / 3600.0;
    switch (lower(hemisphere)) {
        case 'n':
        case 'e':
            return value;
        case 's':
        case 'w':
            return -value;
        default:
            throw std::invalid_argument(std::string("unknown hemisphere: ") + hemisphere);
    }
}

}  // namespace geobench
