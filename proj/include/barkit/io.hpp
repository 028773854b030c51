#ifndef BARKIT_IO_HPP
#define BARKIT_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "barkit/barcode.hpp"
#include "barkit/persistence.hpp"
#include "barkit/shift_space.hpp"
#include "barkit/twist_word.hpp"

namespace barkit {

// Input errors carry the offending file and line in the message.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips to the same double; "inf" for +infinity.
std::string format_value(value_t v);
value_t parse_value(const std::string& token);  // accepts "inf"

// Barcode text format: one bar per line, `<degree|-> <birth> <death|inf>`,
// `#` comment lines ignored. `-` in the degree column means ungraded.
barcode read_barcode(std::istream& in, const std::string& source = "<input>");
barcode read_barcode_file(const std::string& path);
std::string write_barcode(const barcode& b);

// Path file: barcode blocks separated by `---` lines.
std::vector<barcode> read_path(std::istream& in, const std::string& source = "<input>");
std::vector<barcode> read_path_file(const std::string& path);
std::string write_path(const std::vector<barcode>& steps);

// Complex formats: structured text with `generators:` / `boundary:` sections
// or the equivalent JSON document (same field names). read_complex_file
// dispatches on the leading character.
filtered_complex read_complex_text(std::istream& in,
                                   const std::string& source = "<input>");
filtered_complex read_complex_json(std::istream& in,
                                   const std::string& source = "<input>");
filtered_complex read_complex_file(const std::string& path);
std::string write_complex_text(const filtered_complex& c);
std::string write_complex_json(const filtered_complex& c);

// Hypothesis file: `hf_LL' = <int>` and `quasi_isomorphic = <bool>` lines.
rank_hypotheses read_hypotheses(std::istream& in,
                                const std::string& source = "<input>");
rank_hypotheses read_hypotheses_file(const std::string& path);

// Static plot emitters for the persistence diagram / barcode.
std::string plot_csv(const barcode& b);
std::string plot_svg(const barcode& b);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace barkit

#endif
