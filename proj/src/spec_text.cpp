#include "gmodels/spec_text.hpp"
#include "gmodels/modular.hpp"

#include <cctype>

namespace gmodels {

std::string to_string(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    switch (s.kind) {
    case K::Symmetric: return "S(" + std::to_string(s.n) + ")";
    case K::Cyclic: return "C(" + std::to_string(s.n) + ")";
    case K::GL: return "GL(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
    case K::SL: return "SL(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
    case K::PGL: return "PGL(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
    case K::Quaternion8: return "Q8";
    case K::G96: return "G96";
    case K::Cayley: return "Cayley(" + s.path + ")";
    case K::Semidirect:
        return "Semidirect(" + to_string(s.parts.at(0)) + "," + to_string(s.parts.at(1)) + "," +
               std::to_string(s.action) + ")";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupSpec parse_all() {
        GroupSpec s = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip_ws();
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) fail_at("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return static_cast<int>(v);
    }

    std::string name() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected group name");
        return std::string(text_.substr(start, pos_ - start));
    }

    GroupSpec parse_spec() {
        skip_ws();
        const std::size_t name_at = pos_;
        const std::string nm = name();
        if (nm == "Q8" || nm == "G96") {
            if (peek('(')) fail(nm + " takes no arguments");
            return nm == "Q8" ? GroupSpec::quaternion8() : GroupSpec::g96();
        }
        if (nm == "S" || nm == "C") {
            expect('(');
            const std::size_t at = pos_;
            const int n = integer();
            if (n < 1) fail_at("degree must be at least 1", at);
            close_args(nm, 1);
            return nm == "S" ? GroupSpec::symmetric(n) : GroupSpec::cyclic(n);
        }
        if (nm == "GL" || nm == "SL" || nm == "PGL") {
            expect('(');
            const std::size_t n_at = pos_;
            const int n = integer();
            if (!peek(',')) fail(nm + " takes 2 arguments");
            ++pos_;
            skip_ws();
            const std::size_t q_at = pos_;
            const int q = integer();
            close_args(nm, 2);
            if (n != 2) fail_at("only n = 2 is supported", n_at);
            if (!is_prime(static_cast<std::uint64_t>(q))) fail_at("q must be prime", q_at);
            return nm == "GL" ? GroupSpec::gl(q) : nm == "SL" ? GroupSpec::sl(q) : GroupSpec::pgl(q);
        }
        if (nm == "Cayley") {
            expect('(');
            const std::size_t start = pos_;
            int depth = 0;
            while (pos_ < text_.size() && !(text_[pos_] == ')' && depth == 0)) {
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')') --depth;
                ++pos_;
            }
            if (pos_ == text_.size()) fail("unterminated Cayley path");
            std::string path(text_.substr(start, pos_ - start));
            if (path.empty()) fail_at("empty Cayley path", start);
            ++pos_;
            return GroupSpec::cayley(std::move(path));
        }
        if (nm == "Semidirect") {
            expect('(');
            GroupSpec normal = parse_spec();
            expect(',');
            GroupSpec complement = parse_spec();
            expect(',');
            const int action = integer();
            close_args(nm, 3);
            return GroupSpec::semidirect(std::move(normal), std::move(complement), action);
        }
        fail_at("unknown group name '" + nm + "'", name_at);
    }

    void close_args(const std::string& nm, int arity) {
        if (peek(',')) fail(nm + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s"));
        expect(')');
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse_all(); }

} // namespace gmodels
