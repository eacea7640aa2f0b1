#include "flagcode/codefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace flagcode {

std::string serialize(const FlagCode& code) {
    const Field& f = *code.field();
    std::ostringstream out;
    out << "FLC 1\n";
    out << "q " << f.p() << ' ' << f.m();
    for (Elem c : f.modulus()) out << ' ' << c;
    out << '\n';
    out << "n " << code.ambient() << '\n';
    out << "type " << code.type().to_string() << '\n';
    out << "flags " << code.size() << '\n';
    out << "# provenance " << to_string(code.provenance());
    if (!code.provenance_detail().empty()) out << ' ' << code.provenance_detail();
    out << '\n';
    for (std::size_t i = 0; i < code.size(); ++i) {
        out << "flag " << i << '\n';
        const Matrix& g = code.generator(i);
        for (std::size_t r = 0; r < g.rows(); ++r) {
            for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(r, c);
            out << '\n';
        }
    }
    return out.str();
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

std::uint64_t number(const std::string& word, std::size_t line) {
    std::uint64_t v = 0;
    const auto* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, v);
    if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a nonnegative integer, got '" + word + "'");
    return v;
}

class Reader {
public:
    explicit Reader(const std::string& text) {
        std::istringstream in(text);
        std::size_t n = 0;
        for (std::string raw; std::getline(in, raw);) {
            ++n;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            auto words = split(raw);
            if (words.empty()) continue;
            if (words[0].rfind('#', 0) == 0) {
                if (words[0] == "#" && words.size() >= 2 && words[1] == "provenance") provenance_line(raw, words, n);
                continue;
            }
            lines_.push_back({n, std::move(words)});
        }
        last_line_ = n;
    }

    const Line& next(const char* what) {
        if (pos_ >= lines_.size()) throw ParseError(last_line_ + 1, std::string("unexpected end of file, expected ") + what);
        return lines_[pos_++];
    }

    /// A line of the form "<keyword> <values...>" with exactly count values (0 = any positive count).
    const Line& keyed(const char* keyword, std::size_t count) {
        const Line& l = next(keyword);
        if (l.words[0] != keyword)
            throw ParseError(l.number, std::string("expected '") + keyword + "', got '" + l.words[0] + "'");
        if ((count != 0 && l.words.size() != count + 1) || l.words.size() < 2)
            throw ParseError(l.number, std::string("malformed '") + keyword + "' line");
        return l;
    }

    bool at_end() const noexcept { return pos_ >= lines_.size(); }
    const Line& peek() const { return lines_[pos_]; }

    Provenance provenance = Provenance::Adhoc;
    std::string detail;

private:
    void provenance_line(const std::string& raw, const std::vector<std::string>& words, std::size_t n) {
        if (words.size() < 3) throw ParseError(n, "provenance comment without a tag");
        auto p = provenance_from_string(words[2]);
        if (!p) throw ParseError(n, "unknown provenance '" + words[2] + "'");
        provenance = *p;
        std::istringstream rest(raw);
        std::string skip;
        rest >> skip >> skip >> skip;
        std::getline(rest, detail);
        detail.erase(0, std::min(detail.find_first_not_of(" \t"), detail.size()));
        while (!detail.empty() && (detail.back() == ' ' || detail.back() == '\t')) detail.pop_back();
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

}  // namespace

FlagCode parse_code(const std::string& text) {
    Reader in(text);

    const Line& header = in.keyed("FLC", 1);
    if (header.words[1] != "1") throw ParseError(header.number, "unsupported format version " + header.words[1]);

    const Line& ql = in.next("field line");
    if (ql.words[0] != "q" || ql.words.size() < 4) throw ParseError(ql.number, "expected 'q <p> <m> <c0> ... <cm>'");
    const std::uint64_t p = number(ql.words[1], ql.number);
    const std::uint64_t m = number(ql.words[2], ql.number);
    if (m == 0 || m > 64 || ql.words.size() != m + 4)
        throw ParseError(ql.number, "field line needs m + 1 modulus coefficients");
    if (p > UINT32_MAX) throw ParseError(ql.number, "characteristic out of range");
    Poly modulus;
    for (std::size_t i = 3; i < ql.words.size(); ++i) {
        const auto c = number(ql.words[i], ql.number);
        if (c >= p) throw ParseError(ql.number, "modulus coefficient " + ql.words[i] + " is not below p");
        modulus.push_back(static_cast<Elem>(c));
    }
    FieldPtr field;
    try {
        field = Field::create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus);
    } catch (const Error& e) {
        throw ParseError(ql.number, std::string("bad field: ") + e.what());
    }

    const Line& nl = in.keyed("n", 1);
    const std::uint64_t n = number(nl.words[1], nl.number);
    if (n < 2 || n > 4096) throw ParseError(nl.number, "ambient dimension out of range");

    const Line& tl = in.keyed("type", 1);
    std::optional<FlagType> type;
    try {
        type = FlagType::parse(n, tl.words[1]);
    } catch (const Error& e) {
        throw ParseError(tl.number, e.what());
    }

    const Line& fl = in.keyed("flags", 1);
    const std::uint64_t count = number(fl.words[1], fl.number);
    if (count < 2) throw ParseError(fl.number, "a flag code needs at least two flags");

    const std::size_t rows = type->dims().back();
    std::vector<Matrix> gens;
    std::size_t last_block = fl.number;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Line& bl = in.keyed("flag", 1);
        last_block = bl.number;
        if (number(bl.words[1], bl.number) != idx)
            throw ParseError(bl.number, "expected 'flag " + std::to_string(idx) + "'");
        Matrix g(field, rows, n);
        std::size_t row_line = bl.number;
        for (std::size_t r = 0; r < rows; ++r) {
            const Line& rl = in.next("generator row");
            row_line = rl.number;
            if (rl.words.size() != n)
                throw ParseError(rl.number, "row has " + std::to_string(rl.words.size()) + " entries, expected " +
                                                std::to_string(n));
            for (std::size_t c = 0; c < n; ++c) {
                const auto v = number(rl.words[c], rl.number);
                if (!field->contains(v))
                    throw ParseError(rl.number, "element " + rl.words[c] + " out of range for q=" +
                                                    std::to_string(field->q()));
                g(r, c) = static_cast<Elem>(v);
            }
        }
        try {
            Flag::from_generator(*type, g);
        } catch (const Error& e) {
            throw ParseError(row_line, "flag " + std::to_string(idx) + ": " + e.what());
        }
        gens.push_back(std::move(g));
    }
    if (!in.at_end()) throw ParseError(in.peek().number, "trailing content after the last flag");

    try {
        return FlagCode::from_generators(*type, std::move(gens), in.provenance, in.detail);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(last_block, std::string("invalid code: ") + e.what());
    }
}

FlagCode load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "read failed: " + path);
    return parse_code(buf.str());
}

void save_code(const FlagCode& code, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << serialize(code);
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace flagcode
