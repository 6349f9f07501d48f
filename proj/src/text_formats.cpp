#include "dcjscen/text_formats.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "dcjscen/errors.hpp"

namespace dcjscen {

namespace {

struct NumberLine {
    std::size_t line;
    std::vector<int> values;
};

// Splits text into lines of integers, dropping comments and blank lines.
std::vector<NumberLine> number_lines(std::string_view text) {
    std::vector<NumberLine> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        NumberLine nl{line_no, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            int v = 0;
            const char* begin = line.data() + i;
            auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), v);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                                      *ptr != '\t' && *ptr != '\r')) {
                throw ParseError("expected an integer", line_no, i + 1);
            }
            nl.values.push_back(v);
            i = static_cast<std::size_t>(ptr - line.data());
        }
        if (!nl.values.empty()) {
            out.push_back(std::move(nl));
        }
    }
    return out;
}

// Header line "n" followed by integer pairs.
std::pair<int, std::vector<std::pair<int, int>>> sized_pairs(std::string_view text,
                                                            const char* what) {
    auto lines = number_lines(text);
    if (lines.empty() || lines.front().values.size() != 1) {
        throw ParseError(std::string(what) + " must start with a line holding n",
                         lines.empty() ? 0 : lines.front().line, 1);
    }
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].values.size() != 2) {
            throw ParseError(std::string(what) + " lines must hold exactly two integers",
                             lines[i].line, 1);
        }
        pairs.emplace_back(lines[i].values[0], lines[i].values[1]);
    }
    return {lines.front().values[0], std::move(pairs)};
}

}  // namespace

FissionScenario parse_scenario_text(std::string_view text) {
    auto [n, pairs] = sized_pairs(text, "scenario");
    FissionScenario s{n, {}};
    for (const auto& [base, top] : pairs) {
        s.steps.push_back({base, top});
    }
    return s;
}

std::string format_scenario_text(const FissionScenario& s) {
    std::ostringstream os;
    os << s.n << '\n';
    for (const Fission& f : s.steps) {
        os << f.base << ' ' << f.top << '\n';
    }
    return os.str();
}

ParkingFunction parse_parking_text(std::string_view text) {
    auto lines = number_lines(text);
    if (lines.size() > 1) {
        throw ParseError("parking function must be on a single line", lines[1].line, 1);
    }
    return ParkingFunction(lines.empty() ? std::vector<int>{} : lines.front().values);
}

std::string format_parking_text(const ParkingFunction& pf) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pf.values().size(); ++i) {
        os << (i ? " " : "") << pf.values()[i];
    }
    return os.str();
}

LabeledTree parse_tree_text(std::string_view text) {
    auto [n, edges] = sized_pairs(text, "tree");
    return LabeledTree(n, std::move(edges));
}

std::string format_tree_text(const LabeledTree& t) {
    std::ostringstream os;
    os << t.size() << '\n';
    for (const auto& [u, v] : t.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

}  // namespace dcjscen
