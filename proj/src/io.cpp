#include "barkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace barkit {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool blank_or_comment(const std::string& line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line,
                          const std::string& what) {
    throw parse_error(source + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

std::string format_value(value_t v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

value_t parse_value(const std::string& token) {
    if (token == "inf") return infinite_death;
    value_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw parse_error("bad numeric value '" + token + "'");
    return v;
}

barcode read_barcode(std::istream& in, const std::string& source) {
    barcode b;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.size() != 3)
            fail_at(source, lineno, "expected '<degree|-> <birth> <death|inf>'");
        bar x;
        if (tok[0] != "-") {
            int deg = 0;
            auto [ptr, ec] = std::from_chars(tok[0].data(), tok[0].data() + tok[0].size(), deg);
            if (ec != std::errc() || ptr != tok[0].data() + tok[0].size())
                fail_at(source, lineno, "bad degree '" + tok[0] + "'");
            x.degree = deg;
        }
        try {
            x.birth = parse_value(tok[1]);
            x.death = parse_value(tok[2]);
        } catch (const parse_error& e) {
            fail_at(source, lineno, e.what());
        }
        b.bars.push_back(x);
    }
    validation_report v = validate(b);
    if (!v.ok) throw parse_error(source + ": invalid barcode: " + v.message);
    return b;
}

barcode read_barcode_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return read_barcode(in, path);
}

std::string write_barcode(const barcode& b) {
    std::string out;
    for (const bar& x : b.bars) {
        out += x.degree ? std::to_string(*x.degree) : "-";
        out += ' ';
        out += format_value(x.birth);
        out += ' ';
        out += format_value(x.death);
        out += '\n';
    }
    return out;
}

std::vector<barcode> read_path(std::istream& in, const std::string& source) {
    std::vector<std::string> blocks{""};
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line) == "---")
            blocks.emplace_back();
        else
            blocks.back() += line + "\n";
    }
    std::vector<barcode> steps;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::istringstream block(blocks[i]);
        steps.push_back(read_barcode(block, source + " (block " + std::to_string(i + 1) + ")"));
    }
    return steps;
}

std::vector<barcode> read_path_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return read_path(in, path);
}

std::string write_path(const std::vector<barcode>& steps) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) out += "---\n";
        out += write_barcode(steps[i]);
    }
    return out;
}

filtered_complex read_complex_text(std::istream& in, const std::string& source) {
    filtered_complex c;
    enum class section { none, generators, boundary } where = section::none;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::string t = trim(line);
        if (t == "generators:") {
            where = section::generators;
            continue;
        }
        if (t == "boundary:") {
            where = section::boundary;
            continue;
        }
        if (where == section::generators) {
            std::vector<std::string> tok = split_ws(t);
            if (tok.size() != 3)
                fail_at(source, lineno, "expected '<id> <degree> <action>'");
            generator g;
            g.id = tok[0];
            auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), g.degree);
            if (ec != std::errc() || ptr != tok[1].data() + tok[1].size())
                fail_at(source, lineno, "bad degree '" + tok[1] + "'");
            try {
                g.action = parse_value(tok[2]);
            } catch (const parse_error& e) {
                fail_at(source, lineno, e.what());
            }
            c.generators.push_back(g);
        } else if (where == section::boundary) {
            std::size_t colon = t.find(':');
            if (colon == std::string::npos)
                fail_at(source, lineno, "expected '<id> : <id> ...'");
            std::string src = trim(t.substr(0, colon));
            if (src.empty()) fail_at(source, lineno, "missing source id");
            std::vector<std::string> targets = split_ws(t.substr(colon + 1));
            if (!targets.empty()) c.boundary[src] = targets;
        } else {
            fail_at(source, lineno, "content before 'generators:' section");
        }
    }
    validation_report v = validate_complex(c);
    if (!v.ok) throw parse_error(source + ": invalid complex: " + v.message);
    return c;
}

filtered_complex read_complex_json(std::istream& in, const std::string& source) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(source + ": bad JSON: " + e.what());
    }
    filtered_complex c;
    try {
        for (const auto& g : j.at("generators")) {
            generator gen;
            gen.id = g.at("id").get<std::string>();
            gen.degree = g.at("degree").get<int>();
            gen.action = g.at("action").get<value_t>();
            c.generators.push_back(gen);
        }
        if (j.contains("boundary"))
            for (const auto& [src, targets] : j.at("boundary").items()) {
                std::vector<std::string> t = targets.get<std::vector<std::string>>();
                if (!t.empty()) c.boundary[src] = std::move(t);
            }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(source + ": bad complex document: " + e.what());
    }
    validation_report v = validate_complex(c);
    if (!v.ok) throw parse_error(source + ": invalid complex: " + v.message);
    return c;
}

filtered_complex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{') return read_complex_json(in, path);
    return read_complex_text(in, path);
}

std::string write_complex_text(const filtered_complex& c) {
    std::string out = "generators:\n";
    for (const generator& g : c.generators)
        out += g.id + " " + std::to_string(g.degree) + " " + format_value(g.action) + "\n";
    out += "boundary:\n";
    for (const auto& [src, targets] : c.boundary) {
        if (targets.empty()) continue;
        out += src + " :";
        for (const std::string& t : targets) out += " " + t;
        out += "\n";
    }
    return out;
}

std::string write_complex_json(const filtered_complex& c) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const generator& g : c.generators)
        j["generators"].push_back({{"id", g.id}, {"degree", g.degree}, {"action", g.action}});
    j["boundary"] = nlohmann::json::object();
    for (const auto& [src, targets] : c.boundary) j["boundary"][src] = targets;
    return j.dump(2) + "\n";
}

rank_hypotheses read_hypotheses(std::istream& in, const std::string& source) {
    rank_hypotheses h;
    bool have_hf = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail_at(source, lineno, "expected '<key> = <value>'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "hf_LL'") {
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), h.hf);
            if (ec != std::errc() || ptr != value.data() + value.size())
                fail_at(source, lineno, "bad integer '" + value + "'");
            have_hf = true;
        } else if (key == "quasi_isomorphic") {
            if (value == "true")
                h.quasi_isomorphic = true;
            else if (value == "false")
                h.quasi_isomorphic = false;
            else
                fail_at(source, lineno, "expected true or false, got '" + value + "'");
        } else {
            fail_at(source, lineno, "unknown key '" + key + "'");
        }
    }
    if (!have_hf) throw parse_error(source + ": missing hf_LL'");
    return h;
}

rank_hypotheses read_hypotheses_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return read_hypotheses(in, path);
}

std::string plot_csv(const barcode& b) {
    std::string out = "birth,death,degree\n";
    for (const bar& x : b.bars) {
        out += format_value(x.birth) + "," + format_value(x.death) + ",";
        out += x.degree ? std::to_string(*x.degree) : "-";
        out += "\n";
    }
    return out;
}

std::string plot_svg(const barcode& b) {
    // horizontal bars sorted by (birth, death); semi-infinite bars run to the
    // right margin with an open arrowhead
    std::vector<bar> bars = b.bars;
    std::sort(bars.begin(), bars.end(), bar_less);

    value_t lo = 0, hi = 1;
    if (!bars.empty()) {
        lo = bars.front().birth;
        hi = lo;
        for (const bar& x : bars) {
            lo = std::min(lo, x.birth);
            hi = std::max(hi, x.finite() ? x.death : x.birth);
        }
        if (hi == lo) hi = lo + 1;
    }
    const value_t pad = (hi - lo) * 0.08;
    lo -= pad;
    hi += pad;

    const int width = 640, row = 18, margin = 24;
    const int height = margin * 2 + row * std::max<int>(1, static_cast<int>(bars.size()));
    auto xpos = [&](value_t v) {
        return margin + (v - lo) / (hi - lo) * (width - 2 * margin);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
       << width - margin << "\" y2=\"" << height - margin
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const bar& x = bars[i];
        const value_t y = margin + static_cast<value_t>(i) * row + row / 2.0;
        const value_t x1 = xpos(x.birth);
        const value_t x2 = x.finite() ? xpos(x.death) : width - margin;
        os << "<line x1=\"" << format_value(x1) << "\" y1=\"" << format_value(y)
           << "\" x2=\"" << format_value(x2) << "\" y2=\"" << format_value(y)
           << "\" stroke=\"#1f6fb2\" stroke-width=\"4\"/>\n";
        if (!x.finite())
            os << "<path d=\"M " << format_value(x2 - 8) << " " << format_value(y - 5)
               << " L " << format_value(x2) << " " << format_value(y) << " L "
               << format_value(x2 - 8) << " " << format_value(y + 5)
               << "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error(path + ": cannot open for writing");
    out << content;
}

}  // namespace barkit
