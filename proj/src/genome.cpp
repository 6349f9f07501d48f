#include "dcjscen/genome.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dcjscen/errors.hpp"

namespace dcjscen {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), is_name_char);
}

}  // namespace

std::string to_string(const Extremity& e) {
    return e.block + (e.end == End::Tail ? "_t" : "_h");
}

std::string to_string(const SignedBlock& b) {
    return b.reversed ? "-" + b.name : b.name;
}

SignedBlock parse_signed_block(std::string_view token) {
    SignedBlock b;
    if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
        b.reversed = token.front() == '-';
        token.remove_prefix(1);
    }
    if (!valid_name(token)) {
        throw ParseError("invalid block name '" + std::string(token) + "'");
    }
    b.name = std::string(token);
    return b;
}

SignedBlock flipped(SignedBlock b) {
    b.reversed = !b.reversed;
    return b;
}

Extremity left_end(const SignedBlock& b) {
    return {b.name, b.reversed ? End::Head : End::Tail};
}

Extremity right_end(const SignedBlock& b) {
    return {b.name, b.reversed ? End::Tail : End::Head};
}

Adjacency::Adjacency(Extremity a, Extremity b) : first_(std::move(a)), second_(std::move(b)) {
    if (first_ == second_) {
        throw DomainError("adjacency joins extremity " + to_string(first_) + " to itself");
    }
    if (second_ < first_) {
        std::swap(first_, second_);
    }
}

const Extremity& Adjacency::other(const Extremity& e) const {
    if (e == first_) {
        return second_;
    }
    if (e == second_) {
        return first_;
    }
    throw DomainError("extremity " + to_string(e) + " is not in adjacency " + dcjscen::to_string(*this));
}

Adjacency make_adjacency(const SignedBlock& x, const SignedBlock& y) {
    return {right_end(x), left_end(y)};
}

Adjacency make_adjacency(std::string_view x, std::string_view y) {
    return make_adjacency(parse_signed_block(x), parse_signed_block(y));
}

std::pair<SignedBlock, SignedBlock> signed_pair(const Adjacency& adj) {
    // first() is the right end of the left block, second() the left end of the right one
    const Extremity& l = adj.first();
    const Extremity& r = adj.second();
    return {SignedBlock{l.block, l.end == End::Tail}, SignedBlock{r.block, r.end == End::Head}};
}

std::string to_string(const Adjacency& adj) {
    auto [x, y] = signed_pair(adj);
    return "(" + to_string(x) + " " + to_string(y) + ")";
}

// ---------------------------------------------------------------------------
// Genome

Genome::Genome(std::vector<Chromosome> chromosomes) : chromosomes_(std::move(chromosomes)) {
    for (const Chromosome& c : chromosomes_) {
        if (c.blocks.empty()) {
            throw DomainError("empty chromosome");
        }
        for (const SignedBlock& b : c.blocks) {
            if (!valid_name(b.name)) {
                throw DomainError("invalid block name '" + b.name + "'");
            }
            if (!blocks_.insert(b.name).second) {
                throw DomainError("duplicate block '" + b.name + "'");
            }
        }
        const auto& bs = c.blocks;
        for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
            adjacencies_.insert(make_adjacency(bs[i], bs[i + 1]));
        }
        if (c.kind == ChromosomeKind::Circular) {
            adjacencies_.insert(make_adjacency(bs.back(), bs.front()));
        } else {
            telomeres_.insert(left_end(bs.front()));
            telomeres_.insert(right_end(bs.back()));
        }
    }
}

Genome Genome::from_adjacencies(const std::set<std::string>& blocks,
                                const std::set<Adjacency>& adjacencies,
                                const std::set<Extremity>& telomeres) {
    std::map<Extremity, Extremity> partner;
    for (const Adjacency& a : adjacencies) {
        for (const Extremity* e : {&a.first(), &a.second()}) {
            if (!blocks.contains(e->block)) {
                throw DomainError("adjacency " + to_string(a) + " uses unknown block " + e->block);
            }
            if (!partner.emplace(*e, a.other(*e)).second || telomeres.contains(*e)) {
                throw DomainError("extremity " + to_string(*e) + " is used twice");
            }
        }
    }
    for (const Extremity& t : telomeres) {
        if (!blocks.contains(t.block)) {
            throw DomainError("telomere on unknown block " + t.block);
        }
    }
    if (partner.size() + telomeres.size() != 2 * blocks.size()) {
        throw DomainError("adjacencies and telomeres do not cover every extremity exactly once");
    }

    std::set<std::string> visited;
    std::vector<Chromosome> chromosomes;

    // Reads blocks starting at `start` (entered from the left) until a
    // telomere or the first block again is reached.
    auto walk = [&](Extremity start, ChromosomeKind kind) {
        Chromosome c{kind, {}};
        Extremity entry = start;
        while (true) {
            SignedBlock b{entry.block, entry.end == End::Head};
            if (!visited.insert(b.name).second) {
                break;
            }
            c.blocks.push_back(b);
            auto it = partner.find(right_end(b));
            if (it == partner.end()) {
                break;
            }
            entry = it->second;
        }
        return c;
    };

    for (const Extremity& t : telomeres) {
        if (!visited.contains(t.block)) {
            chromosomes.push_back(walk(t, ChromosomeKind::Linear));
        }
    }
    for (const std::string& name : blocks) {
        if (!visited.contains(name)) {
            chromosomes.push_back(walk(Extremity{name, End::Tail}, ChromosomeKind::Circular));
        }
    }
    return Genome(std::move(chromosomes));
}

std::set<SignedBlock> Genome::tails() const {
    std::set<SignedBlock> out;
    for (const Chromosome& c : chromosomes_) {
        if (c.kind == ChromosomeKind::Linear) {
            out.insert(c.blocks.front());
            out.insert(flipped(c.blocks.back()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class GenomeParser {
public:
    explicit GenomeParser(std::string_view text) : text_(text) {}

    std::vector<NamedGenome> run() {
        std::vector<NamedGenome> out;
        std::string name;
        std::vector<Chromosome> chromosomes;
        std::size_t section_line = 1;
        bool have_section = false;

        auto close_section = [&] {
            if (!have_section) {
                return;
            }
            if (chromosomes.empty()) {
                throw ParseError("genome '" + name + "' has no chromosomes", section_line, 1);
            }
            out.push_back({name, build(std::move(chromosomes), section_line)});
            chromosomes.clear();
        };

        while (pos_ < text_.size()) {
            skip_blanks();
            if (at_end_of_line()) {
                next_line();
                continue;
            }
            char c = text_[pos_];
            if (c == '>') {
                close_section();
                ++pos_;
                std::size_t start = pos_;
                while (!at_end_of_line()) {
                    ++pos_;
                }
                name = trim(text_.substr(start, pos_ - start));
                section_line = line_;
                have_section = true;
                continue;
            }
            if (c == '(' || c == '[') {
                if (!have_section) {
                    have_section = true;
                    section_line = line_;
                }
                chromosomes.push_back(chromosome());
                continue;
            }
            fail(std::string("expected '(', '[' or '>' but found '") + c + "'");
        }
        close_section();
        return out;
    }

private:
    static std::string trim(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return std::string(s);
    }

    Genome build(std::vector<Chromosome> chromosomes, std::size_t line) {
        try {
            return Genome(std::move(chromosomes));
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line, 1);
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, pos_ - line_start_ + 1);
    }

    bool at_end_of_line() const {
        return pos_ >= text_.size() || text_[pos_] == '\n' || text_[pos_] == '#';
    }

    void next_line() {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
            ++pos_;
        }
        if (pos_ < text_.size()) {
            ++pos_;
            ++line_;
            line_start_ = pos_;
        }
    }

    void skip_blanks() {
        while (pos_ < text_.size() && text_[pos_] != '\n' &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    Chromosome chromosome() {
        const char open = text_[pos_];
        const char close = open == '(' ? ')' : ']';
        Chromosome c{open == '(' ? ChromosomeKind::Linear : ChromosomeKind::Circular, {}};
        ++pos_;
        while (true) {
            skip_blanks();
            if (at_end_of_line()) {
                fail(std::string("unterminated chromosome, expected '") + close + "'");
            }
            if (text_[pos_] == close) {
                ++pos_;
                break;
            }
            std::size_t start = pos_;
            while (!at_end_of_line() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
                   text_[pos_] != close) {
                ++pos_;
            }
            std::string_view token = text_.substr(start, pos_ - start);
            try {
                c.blocks.push_back(parse_signed_block(token));
            } catch (const ParseError& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (c.blocks.empty()) {
            fail("empty chromosome");
        }
        return c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
};

using Reading = std::vector<SignedBlock>;

Reading reverse_reading(const Reading& r) {
    Reading out;
    out.reserve(r.size());
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
        out.push_back(flipped(*it));
    }
    return out;
}

Chromosome canonical(const Chromosome& c) {
    Chromosome out{c.kind, c.blocks};
    Reading rev = reverse_reading(c.blocks);
    if (c.kind == ChromosomeKind::Linear) {
        out.blocks = std::min(c.blocks, rev);
        return out;
    }
    for (const Reading* r : {&c.blocks, static_cast<const Reading*>(&rev)}) {
        Reading rot = *r;
        for (std::size_t i = 0; i < rot.size(); ++i) {
            out.blocks = std::min(out.blocks, rot);
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
    }
    return out;
}

}  // namespace

std::vector<NamedGenome> parse_genome_file(std::string_view text) {
    return GenomeParser(text).run();
}

Genome parse_genome(std::string_view text) {
    auto genomes = parse_genome_file(text);
    if (genomes.size() != 1) {
        throw ParseError("expected exactly one genome, found " + std::to_string(genomes.size()));
    }
    return std::move(genomes.front().genome);
}

std::string serialize_genome(const Genome& g) {
    std::vector<Chromosome> cs;
    for (const Chromosome& c : g.chromosomes()) {
        cs.push_back(canonical(c));
    }
    std::sort(cs.begin(), cs.end(), [](const Chromosome& x, const Chromosome& y) {
        return std::tie(x.blocks, x.kind) < std::tie(y.blocks, y.kind);
    });
    std::ostringstream os;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) {
            os << '\n';
        }
        const bool linear = cs[i].kind == ChromosomeKind::Linear;
        os << (linear ? '(' : '[');
        for (std::size_t j = 0; j < cs[i].blocks.size(); ++j) {
            os << (j ? " " : "") << to_string(cs[i].blocks[j]);
        }
        os << (linear ? ')' : ']');
    }
    return os.str();
}

bool co_tailed(const Genome& a, const Genome& b) {
    if (a.blocks() != b.blocks()) {
        throw DomainError("genomes have different block sets");
    }
    return a.tails() == b.tails();
}

std::set<Adjacency> adjacency_set(const Genome& g) {
    return g.adjacencies();
}

bool genomes_equal(const Genome& a, const Genome& b) {
    return a.blocks() == b.blocks() && a.adjacencies() == b.adjacencies() &&
           a.telomeres() == b.telomeres();
}

// ---------------------------------------------------------------------------
// DCJ

namespace {

template <typename T>
std::array<T, 2> sorted_pair(T x, T y) {
    if (y < x) {
        std::swap(x, y);
    }
    return {std::move(x), std::move(y)};
}

std::vector<Extremity> extremities_of(const std::array<Adjacency, 2>& adjs) {
    std::vector<Extremity> out{adjs[0].first(), adjs[0].second(), adjs[1].first(),
                               adjs[1].second()};
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DcjOp::DcjOp(Adjacency cut1, Adjacency cut2, Adjacency form1, Adjacency form2)
    : cut_(sorted_pair(std::move(cut1), std::move(cut2))),
      form_(sorted_pair(std::move(form1), std::move(form2))) {
    auto ends = extremities_of(cut_);
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
        throw DomainError("DCJ must cut two disjoint adjacencies");
    }
    if (extremities_of(form_) != ends) {
        throw DomainError("DCJ must rejoin exactly the four cut extremities");
    }
    if (form_ == cut_) {
        throw DomainError("DCJ rewiring is the identity");
    }
}

DcjOp DcjOp::inverse() const {
    return DcjOp(form_[0], form_[1], cut_[0], cut_[1]);
}

std::array<DcjOp, 2> DcjOp::rewirings(const Adjacency& x, const Adjacency& y) {
    return {DcjOp(x, y, Adjacency(x.first(), y.first()), Adjacency(x.second(), y.second())),
            DcjOp(x, y, Adjacency(x.first(), y.second()), Adjacency(x.second(), y.first()))};
}

std::string to_string(const DcjOp& op) {
    return "cut " + to_string(op.cut()[0]) + " " + to_string(op.cut()[1]) + " form " +
           to_string(op.form()[0]) + " " + to_string(op.form()[1]);
}

Genome apply_dcj(const Genome& g, const DcjOp& op) {
    std::set<Adjacency> adjs = g.adjacencies();
    for (const Adjacency& c : op.cut()) {
        if (adjs.erase(c) == 0) {
            throw DomainError("adjacency " + to_string(c) + " is not in the genome");
        }
    }
    for (const Adjacency& f : op.form()) {
        adjs.insert(f);
    }
    return Genome::from_adjacencies(g.blocks(), adjs, g.telomeres());
}

}  // namespace dcjscen
