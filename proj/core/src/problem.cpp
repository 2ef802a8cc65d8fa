#include "chernob/problem.hpp"

#include <fstream>
#include <sstream>

#include "chernob/errors.hpp"
#include "chernob/parser.hpp"

namespace chernob {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

// Blocks are bracketed, entries ';'-separated: [dx; x*dy] [dy].
std::vector<std::vector<std::string>> parse_blocks(const std::string& value, int line,
                                                   const std::string& key) {
  std::vector<std::vector<std::string>> blocks;
  std::size_t pos = 0;
  while (pos < value.size()) {
    while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
    if (pos >= value.size()) break;
    if (value[pos] != '[') {
      throw ValidationError("line " + std::to_string(line) + ": expected '[' in " + key);
    }
    const std::size_t close = value.find(']', pos);
    if (close == std::string::npos) {
      throw ValidationError("line " + std::to_string(line) + ": unterminated block in " + key);
    }
    blocks.push_back(split(value.substr(pos + 1, close - pos - 1), ';'));
    if (blocks.back().empty()) {
      throw ValidationError("line " + std::to_string(line) + ": empty block in " + key);
    }
    pos = close + 1;
  }
  if (blocks.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": no blocks in " + key);
  }
  return blocks;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
  ProblemFile file;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<std::string> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string content = trim(raw);
    if (content.empty()) continue;
    const std::size_t colon = content.find(':');
    if (colon == std::string::npos) {
      throw ValidationError("line " + std::to_string(line) + ": expected 'key: value'");
    }
    const std::string key = trim(content.substr(0, colon));
    const std::string value = trim(content.substr(colon + 1));
    for (const std::string& s : seen) {
      if (s == key) {
        throw ValidationError("line " + std::to_string(line) + ": duplicate key '" + key + "'");
      }
    }
    seen.push_back(key);
    if (key == "variables") {
      file.variables = split(value, ',');
      if (file.variables.empty()) {
        throw ValidationError("line " + std::to_string(line) + ": no variables declared");
      }
    } else if (key == "equations") {
      file.equations = split(value, ';');
    } else if (key == "partition") {
      for (const std::string& part : split(value, ',')) {
        try {
          file.partition.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw ValidationError("line " + std::to_string(line) + ": bad partition entry '" +
                                part + "'");
        }
      }
    } else if (key == "collection") {
      file.collection = parse_blocks(value, line, "collection");
    } else if (key == "maps") {
      file.maps = parse_blocks(value, line, "maps");
    } else {
      throw ValidationError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return file;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem_text(buffer.str());
}

std::string problem_file_text(const ProblemFile& file) {
  std::ostringstream out;
  out << "variables: ";
  for (std::size_t i = 0; i < file.variables.size(); ++i) {
    if (i > 0) out << ", ";
    out << file.variables[i];
  }
  out << "\n";
  if (!file.equations.empty()) {
    out << "equations: ";
    for (std::size_t i = 0; i < file.equations.size(); ++i) {
      if (i > 0) out << "; ";
      out << file.equations[i];
    }
    out << "\n";
  }
  out << "partition: ";
  for (std::size_t i = 0; i < file.partition.size(); ++i) {
    if (i > 0) out << ", ";
    out << file.partition[i];
  }
  out << "\n";
  const auto& blocks = file.uses_maps() ? file.maps : file.collection;
  out << (file.uses_maps() ? "maps: " : "collection: ");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out << " ";
    out << "[";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) out << "; ";
      out << blocks[b][i];
    }
    out << "]";
  }
  out << "\n";
  return out.str();
}

Problem build_problem(const ProblemFile& file) {
  if (file.variables.empty()) throw ValidationError("problem file declares no variables");
  if (file.partition.empty()) throw ValidationError("problem file declares no partition");
  if (file.collection.empty() && file.maps.empty()) {
    throw ValidationError("problem file needs either 'collection' or 'maps'");
  }
  if (!file.collection.empty() && !file.maps.empty()) {
    throw ValidationError("problem file must not declare both 'collection' and 'maps'");
  }

  const int variable_count = static_cast<int>(file.variables.size());
  std::vector<Polynomial> equations;
  for (std::size_t i = 0; i < file.equations.size(); ++i) {
    try {
      equations.push_back(parse_polynomial(file.equations[i], file.variables));
    } catch (const ValidationError& e) {
      throw ValidationError("equation " + std::to_string(i + 1) + ": " + e.what());
    }
  }

  const int n = variable_count - static_cast<int>(equations.size());
  if (n < 1) {
    throw ValidationError("dimension " + std::to_string(n) +
                          " is not positive (variables minus equations)");
  }
  Partition partition(file.partition);
  if (partition.sum() != n) {
    throw ValidationError("partition sums to " + std::to_string(partition.sum()) +
                          ", expected " + std::to_string(n));
  }

  VarietyGerm variety(variable_count, std::move(equations));

  std::optional<FormCollection> collection;
  if (file.uses_maps()) {
    std::vector<std::vector<Polynomial>> maps;
    for (std::size_t b = 0; b < file.maps.size(); ++b) {
      std::vector<Polynomial> tuple;
      for (std::size_t i = 0; i < file.maps[b].size(); ++i) {
        try {
          tuple.push_back(parse_polynomial(file.maps[b][i], file.variables));
        } catch (const ValidationError& e) {
          throw ValidationError("maps block " + std::to_string(b + 1) + ", component " +
                                std::to_string(i + 1) + ": " + e.what());
        }
      }
      maps.push_back(std::move(tuple));
    }
    collection = collection_from_maps(maps, partition);
  } else {
    std::vector<std::vector<OneForm>> blocks;
    for (std::size_t b = 0; b < file.collection.size(); ++b) {
      std::vector<OneForm> block;
      for (std::size_t i = 0; i < file.collection[b].size(); ++i) {
        try {
          block.push_back(parse_one_form(file.collection[b][i], file.variables));
        } catch (const ValidationError& e) {
          throw ValidationError("collection block " + std::to_string(b + 1) + ", form " +
                                std::to_string(i + 1) + ": " + e.what());
        }
      }
      blocks.push_back(std::move(block));
    }
    collection = FormCollection(partition, std::move(blocks));
  }

  // Canonical echo: every expression re-printed in canonical form.
  ProblemFile echo;
  echo.variables = file.variables;
  for (const Polynomial& f : variety.equations()) {
    echo.equations.push_back(to_string(f, file.variables));
  }
  echo.partition = file.partition;
  if (file.uses_maps()) {
    for (std::size_t b = 0; b < file.maps.size(); ++b) {
      std::vector<std::string> tuple;
      for (const std::string& component : file.maps[b]) {
        tuple.push_back(to_string(parse_polynomial(component, file.variables), file.variables));
      }
      echo.maps.push_back(std::move(tuple));
    }
  } else {
    for (const auto& block : collection->blocks()) {
      std::vector<std::string> forms;
      for (const OneForm& w : block) forms.push_back(to_string(w, file.variables));
      echo.collection.push_back(std::move(forms));
    }
  }

  return Problem{std::move(variety), std::move(*collection), std::move(echo)};
}

}  // namespace chernob
