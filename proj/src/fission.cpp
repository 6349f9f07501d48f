#include "dcjscen/fission.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dcjscen/errors.hpp"

namespace dcjscen {

CyclePartition::CyclePartition(int n) : n_(n) {
    if (n < 1) {
        throw DomainError("cycle size must be at least 1");
    }
    blocks_.emplace_back(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        blocks_[0][static_cast<std::size_t>(i)] = i + 1;
    }
    index();
}

CyclePartition::CyclePartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 1) {
        throw DomainError("cycle size must be at least 1");
    }
    for (const auto& b : blocks_) {
        if (b.empty() || !std::is_sorted(b.begin(), b.end())) {
            throw DomainError("partition blocks must be nonempty and increasing");
        }
    }
    std::sort(blocks_.begin(), blocks_.end());
    index();
}

void CyclePartition::index() {
    owner_.assign(static_cast<std::size_t>(n_), blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (int x : blocks_[i]) {
            if (x < 1 || x > n_ || owner_[static_cast<std::size_t>(x - 1)] != blocks_.size()) {
                throw DomainError("blocks do not partition {1.." + std::to_string(n_) + "}");
            }
            owner_[static_cast<std::size_t>(x - 1)] = i;
        }
    }
    if (std::find(owner_.begin(), owner_.end(), blocks_.size()) != owner_.end()) {
        throw DomainError("blocks do not cover {1.." + std::to_string(n_) + "}");
    }
}

const std::vector<int>& CyclePartition::block_containing(int x) const {
    if (x < 1 || x > n_) {
        throw DomainError(std::to_string(x) + " is outside {1.." + std::to_string(n_) + "}");
    }
    return blocks_[owner_[static_cast<std::size_t>(x - 1)]];
}

bool CyclePartition::same_block(int x, int y) const {
    return &block_containing(x) == &block_containing(y);
}

std::string to_string(const CyclePartition& p) {
    std::ostringstream os;
    for (const auto& b : p.blocks()) {
        os << '(';
        for (std::size_t i = 0; i < b.size(); ++i) {
            os << (i ? " " : "") << b[i];
        }
        os << ')';
    }
    return os.str();
}

CyclePartition parse_partition(int n, std::string_view text) {
    std::vector<std::vector<int>> blocks;
    std::vector<int>* open = nullptr;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(' && !open) {
            open = &blocks.emplace_back();
            ++i;
        } else if (c == ')' && open) {
            open = nullptr;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c)) && open) {
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i++] - '0');
            }
            open->push_back(v);
        } else {
            throw ParseError("bad partition text at offset " + std::to_string(i));
        }
    }
    if (open) {
        throw ParseError("unterminated partition block");
    }
    return CyclePartition(n, std::move(blocks));
}

int partner_of(const CyclePartition& part, const Fission& f) {
    const int n = part.ground_size();
    auto in_range = [n](int x) { return x >= 1 && x <= n; };
    if (!in_range(f.base) || !in_range(f.top)) {
        throw DomainError("fission (" + std::to_string(f.base) + "," + std::to_string(f.top) +
                          ") is outside {1.." + std::to_string(n) + "}");
    }
    if (f.base >= f.top) {
        throw DomainError("fission base " + std::to_string(f.base) + " must be below top " +
                          std::to_string(f.top));
    }
    if (!part.same_block(f.base, f.top)) {
        throw DomainError(std::to_string(f.base) + " and " + std::to_string(f.top) +
                          " are in different cycles");
    }
    const auto& b = part.block_containing(f.base);
    return *std::upper_bound(b.begin(), b.end(), f.base);
}

CyclePartition apply_fission(const CyclePartition& part, const Fission& f) {
    partner_of(part, f);
    std::vector<std::vector<int>> blocks = part.blocks();
    for (auto& b : blocks) {
        if (!std::binary_search(b.begin(), b.end(), f.base)) {
            continue;
        }
        std::vector<int> rest;
        std::vector<int> excised;
        for (int y : b) {
            (y > f.base && y <= f.top ? excised : rest).push_back(y);
        }
        b = std::move(rest);
        blocks.push_back(std::move(excised));
        break;
    }
    return CyclePartition(part.ground_size(), std::move(blocks));
}

ValidationReport validate_scenario(const FissionScenario& s) {
    ValidationReport r;
    if (s.n < 1) {
        r.ok = false;
        r.reason = "cycle size must be at least 1";
        return r;
    }
    if (s.steps.size() != static_cast<std::size_t>(s.n - 1)) {
        r.ok = false;
        r.reason = "scenario has " + std::to_string(s.steps.size()) + " steps, needs " +
                   std::to_string(s.n - 1);
        return r;
    }
    CyclePartition part(s.n);
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        try {
            part = apply_fission(part, s.steps[i]);
        } catch (const DomainError& e) {
            r.ok = false;
            r.failing_step = i + 1;
            r.reason = e.what();
            r.partition = part;
            return r;
        }
    }
    return r;
}

void require_valid(const FissionScenario& s) {
    ValidationReport r = validate_scenario(s);
    if (!r) {
        std::string msg = "invalid scenario";
        if (r.failing_step) {
            msg += " at step " + std::to_string(r.failing_step) + " on " + to_string(*r.partition);
        }
        throw DomainError(msg + ": " + r.reason);
    }
}

std::vector<CyclePartition> run_scenario(const FissionScenario& s) {
    require_valid(s);
    std::vector<CyclePartition> trace{CyclePartition(s.n)};
    for (const Fission& f : s.steps) {
        trace.push_back(apply_fission(trace.back(), f));
    }
    return trace;
}

std::vector<std::pair<int, int>> base_partner_pairs(const FissionScenario& s) {
    require_valid(s);
    std::vector<std::pair<int, int>> pairs;
    CyclePartition part(s.n);
    for (const Fission& f : s.steps) {
        pairs.emplace_back(f.base, partner_of(part, f));
        part = apply_fission(part, f);
    }
    return pairs;
}

int sup(std::span<const std::pair<int, int>> pairs, int x) {
    std::map<int, int> last_partner;
    for (const auto& [base, partner] : pairs) {
        if (partner <= base) {
            throw DomainError("partner must exceed its base");
        }
        last_partner[base] = partner;
    }
    for (auto it = last_partner.find(x); it != last_partner.end(); it = last_partner.find(x)) {
        x = it->second;
    }
    return x;
}

bool blocks_increasing(const CyclePartition& p) {
    return std::all_of(p.blocks().begin(), p.blocks().end(), [](const std::vector<int>& b) {
        return std::adjacent_find(b.begin(), b.end(), std::greater_equal<>()) == b.end();
    });
}

bool is_non_crossing(const CyclePartition& p) {
    // Walking 1..n, blocks must open and close like brackets: once we return
    // to a block, every block opened since must already be finished.
    std::vector<std::size_t> stack;
    std::vector<std::size_t> remaining;
    std::map<const std::vector<int>*, std::size_t> id;
    for (const auto& b : p.blocks()) {
        id.emplace(&b, remaining.size());
        remaining.push_back(b.size());
    }
    for (int x = 1; x <= p.ground_size(); ++x) {
        std::size_t b = id.at(&p.block_containing(x));
        if (!stack.empty() && stack.back() == b) {
            // continuing the innermost open block
        } else if (std::find(stack.begin(), stack.end(), b) != stack.end()) {
            return false;
        } else {
            stack.push_back(b);
        }
        if (--remaining[b] == 0) {
            stack.pop_back();
        }
    }
    return true;
}

bool refines(const CyclePartition& finer, const CyclePartition& coarser) {
    if (finer.ground_size() != coarser.ground_size()) {
        return false;
    }
    return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](const std::vector<int>& b) {
        return std::all_of(b.begin(), b.end(), [&](int x) { return coarser.same_block(b.front(), x); });
    });
}

}  // namespace dcjscen
