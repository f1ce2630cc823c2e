#include "hochcat/category_text.hpp"

#include "hochcat/errors.hpp"

#include <fmt/core.h>

#include <fstream>
#include <sstream>
#include <vector>

namespace hochcat {

namespace {

std::vector<std::string> tokenize(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what)
{
    throw CategoryError("ParseError", fmt::format("line {}: {}", line_no, what), {{"line", std::to_string(line_no)}});
}

} // namespace

RawCategory parse_category_text(std::string_view text)
{
    RawCategory raw;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tok = tokenize(line);
        if (tok.empty())
            continue;

        if (tok[0] == "object") {
            if (tok.size() != 2)
                parse_error(line_no, "expected 'object <name>'");
            raw.objects.push_back(tok[1]);
        } else if (tok[0] == "morphism") {
            const bool identity = tok.size() == 7 && tok[6] == "identity";
            if (!(tok.size() == 6 || identity) || tok[2] != ":" || tok[4] != "->")
                parse_error(line_no, "expected 'morphism <name> : <src> -> <tgt> [identity]'");
            raw.morphisms.push_back({tok[1], tok[3], tok[5], identity});
        } else if (tok[0] == "compose") {
            if (tok.size() != 5 || tok[3] != "=")
                parse_error(line_no, "expected 'compose <g> <f> = <h>'");
            raw.composites.push_back({tok[1], tok[2], tok[4]});
        } else {
            parse_error(line_no, fmt::format("unknown directive '{}'", tok[0]));
        }
        if (end == text.size())
            break;
    }
    return raw;
}

std::string format_category(const FiniteCategory& cat)
{
    const auto raw = to_raw(cat);
    std::string out;
    for (const auto& x : raw.objects)
        out += fmt::format("object {}\n", x);
    for (const auto& m : raw.morphisms)
        out += fmt::format("morphism {} : {} -> {}{}\n", m.name, m.source, m.target, m.identity ? " identity" : "");
    for (const auto& c : raw.composites)
        out += fmt::format("compose {} {} = {}\n", c.g, c.f, c.h);
    return out;
}

FiniteCategory load_category_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CategoryError("FileNotFound", fmt::format("cannot read '{}'", path), {{"path", path}});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return validate_category(parse_category_text(buffer.str()));
}

} // namespace hochcat
