#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "annibounds/session.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

int report_syntax_error(const annibounds::SyntaxError& e, const std::string& text, bool json) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < e.offset() && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  if (json) {
    annibounds::session::Json j;
    j["ring"] = nullptr;
    j["commands"] = annibounds::session::Json::array();
    j["failures"] = {{{"offset", e.offset()}, {"line", line}, {"column", column}, {"reason", e.bare_message()}}};
    j["ok"] = false;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "syntax error at line " << line << ", column " << column << " (offset " << e.offset()
              << "): " << e.bare_message() << "\n";
  }
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilator bounds for Ext and local cohomology modules"};
  bool check = false;
  std::string format = "text";
  std::string path = "-";
  app.add_flag("--check", check, "Run every available oracle alongside bound commands");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("session", path, "Session file, or - for stdin");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return 2;
    }
    text = read_all(in);
  }

  const bool json = format == "json";
  annibounds::session::Options options;
  options.check = check;
  try {
    options.max_degree = annibounds::max_check_degree();
  } catch (const annibounds::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  annibounds::session::Script script;
  try {
    script = annibounds::session::parse_session(text);
  } catch (const annibounds::SyntaxError& e) {
    return report_syntax_error(e, text, json);
  }

  annibounds::session::Session session(std::move(script), options);
  session.run();
  if (json) {
    std::cout << session.json().dump(2) << "\n";
  } else {
    std::cout << session.text();
  }
  return session.all_passed() ? 0 : 1;
}
