#include <json.hpp>
#include <sstream>

#include "hypergw/error.hpp"
#include "hypergw/gw_invariants.hpp"

namespace hypergw {

namespace {

using json = nlohmann::ordered_json;

struct Column {
  const char* name;
  std::optional<Rational> GWRow::*field;
};

const Column kColumns[] = {
    {"N0", &GWRow::N0}, {"GW1_reduced", &GWRow::GW1_reduced}, {"N1", &GWRow::N1},
    {"n0", &GWRow::n0}, {"n1", &GWRow::n1},
};

std::vector<const Column*> present_columns(const GWTable& t) {
  std::vector<const Column*> out;
  for (const Column& c : kColumns)
    for (const GWRow& r : t.rows)
      if (r.*c.field) {
        out.push_back(&c);
        break;
      }
  return out;
}

Rational parse_cell(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "bad rational '" + s + "'");
  }
}

}  // namespace

std::string to_json(const GWTable& t) {
  json rows = json::array();
  for (const GWRow& r : t.rows) {
    json row;
    row["d"] = r.d;
    for (const Column& c : kColumns)
      if (r.*c.field) row[c.name] = to_string(*(r.*c.field));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = t.n;
  doc["truncation"] = t.truncation;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

GWTable table_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  GWTable t;
  try {
    t.n = doc.at("n").get<int>();
    t.truncation = doc.at("truncation").get<int>();
    for (const json& row : doc.at("rows")) {
      GWRow r;
      r.d = row.at("d").get<int>();
      for (const Column& c : kColumns)
        if (row.contains(c.name)) r.*c.field = parse_cell(row.at(c.name).get<std::string>());
      t.rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("unexpected table layout: ") + e.what());
  }
  return t;
}

std::string to_csv(const GWTable& t) {
  const auto cols = present_columns(t);
  std::ostringstream out;
  out << "n,truncation,d";
  for (const Column* c : cols) out << ',' << c->name;
  out << '\n';
  for (const GWRow& r : t.rows) {
    out << t.n << ',' << t.truncation << ',' << r.d;
    for (const Column* c : cols) {
      out << ',';
      if (r.*(c->field)) out << to_string(*(r.*(c->field)));
    }
    out << '\n';
  }
  return out.str();
}

GWTable table_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(s);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!s.empty() && s.back() == ',') cells.emplace_back();
    return cells;
  };
  if (!std::getline(in, line)) throw Error(ErrorKind::InvalidArgument, "empty CSV");
  const auto header = split(line);
  if (header.size() < 3 || header[0] != "n" || header[1] != "truncation" || header[2] != "d")
    throw Error(ErrorKind::InvalidArgument, "CSV header must start with n,truncation,d");
  std::vector<const Column*> cols;
  for (std::size_t i = 3; i < header.size(); ++i) {
    const Column* found = nullptr;
    for (const Column& c : kColumns)
      if (header[i] == c.name) found = &c;
    if (!found) throw Error(ErrorKind::InvalidArgument, "unknown CSV column " + header[i]);
    cols.push_back(found);
  }
  GWTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw Error(ErrorKind::InvalidArgument, "ragged CSV row: " + line);
    t.n = std::stoi(cells[0]);
    t.truncation = std::stoi(cells[1]);
    GWRow r;
    r.d = std::stoi(cells[2]);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (!cells[i + 3].empty()) r.*(cols[i]->field) = parse_cell(cells[i + 3]);
    t.rows.push_back(std::move(r));
  }
  return t;
}

std::string to_text(const GWTable& t) {
  const auto cols = present_columns(t);
  std::ostringstream out;
  out << "n = " << t.n << ", degrees 1.." << t.truncation << '\n';
  for (const GWRow& r : t.rows) {
    out << "d=" << r.d;
    for (const Column* c : cols)
      if (r.*(c->field)) out << "  " << c->name << " = " << to_string(*(r.*(c->field)));
    out << '\n';
  }
  return out.str();
}

}  // namespace hypergw
