#pragma once

#include <string>

#include "json.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/isoclinism.hpp"
#include "skewbrace/ybe.hpp"

namespace sb::io {

using json = nlohmann::ordered_json;

json group_to_json(const groups::CayleyGroup& g);  // {"n":, "table": [[...]]}
groups::CayleyGroup group_from_json(const json& j);

json brace_to_json(const braces::SkewBrace& b);  // {"n":, "add":, "circ":}
braces::SkewBrace brace_from_json(const json& j, bool deep = false);

json solution_to_json(const ybe::Solution& s);  // {"n":, "sigma":, "tau":}
ybe::Solution solution_from_json(const json& j);

json witness_to_json(const iso::IsoclinismWitness& w);
iso::IsoclinismWitness witness_from_json(const json& j);

json fingerprint_to_json(const iso::Fingerprint& f);
iso::Fingerprint fingerprint_from_json(const json& j);

json parse_json(const std::string& text);       // ParseError on bad input
json load_json_file(const std::string& path);   // IoError / ParseError
void save_text_file(const std::string& path, const std::string& text);
std::string load_text_file(const std::string& path);

}  // namespace sb::io
