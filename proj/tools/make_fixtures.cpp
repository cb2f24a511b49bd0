// Writes the shipped fixture files into a directory (default: fixtures).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fixture_recipes.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);
    for (const auto& [name, text] : hjd::fixtures::all_fixtures()) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << (dir / name) << "\n";
            return 2;
        }
        out << text;
        std::cout << (dir / name).string() << "\n";
    }
    return 0;
}
