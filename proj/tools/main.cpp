#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gsg/game.hpp"
#include "gsg/repl.hpp"
#include "gsg/text.hpp"

int main(int argc, char** argv) {
  CLI::App app{"calculator for guaranteed scoring game values"};
  std::string batch_path;
  std::string format = "literal";
  app.add_option("--batch", batch_path, "execute commands from FILE and exit");
  app.add_option("--format", format, "output style for game values")
      ->check(CLI::IsMember({"literal", "pretty"}));
  CLI11_PARSE(app, argc, argv);

  gsg::FormatStyle style =
      format == "pretty" ? gsg::FormatStyle::Pretty : gsg::FormatStyle::Literal;

  std::ifstream batch_file;
  bool batch = !batch_path.empty();
  if (batch) {
    batch_file.open(batch_path);
    if (!batch_file) {
      std::cerr << "error: cannot open '" << batch_path << "'\n";
      return 2;
    }
  }
  std::istream& in = batch ? static_cast<std::istream&>(batch_file) : std::cin;
  bool interactive = !batch && isatty(fileno(stdin));

  gsg::Engine engine;
  gsg::Session session;
  bool failed = false;
  std::string line;
  while (true) {
    if (interactive) std::cout << "gsg> " << std::flush;
    if (!std::getline(in, line)) break;
    if (batch) std::cout << "> " << line << "\n";
    gsg::CommandResult result = gsg::run_command(engine, session, line, style);
    if (result.ok) {
      if (!result.output.empty()) std::cout << result.output << "\n";
    } else {
      failed = true;
      std::cerr << result.output << "\n";
    }
    if (result.quit) break;
  }
  return batch && failed ? 1 : 0;
}
