#include <filesystem>
#include <iostream>

#include "nilcoh/catalog.hpp"
#include "nilcoh/io.hpp"

using namespace nilcoh;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  auto cat = standard_catalog(Field::rationals());
  for (const auto& [name, algebra] : cat) {
    std::string path = dir + "/" + name + ".json";
    write_algebra_file(path, name, *algebra);
    std::cout << path << "\n";
  }
  return 0;
}
