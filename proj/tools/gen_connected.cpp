// Prints every connected graph on 1..N vertices (N <= 8), one graph6 line
// each, up to isomorphism.
#include <cstdlib>
#include <iostream>
#include <string>

#include "mui/graph_enum.hpp"

int main(int argc, char** argv) {
    int max_n = argc > 1 ? std::atoi(argv[1]) : 7;
    if (max_n < 1 || max_n > 8) {
        std::cerr << "usage: gen_connected N   (1 <= N <= 8)\n";
        return 2;
    }
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : mui::connected_graphs(n)) std::cout << mui::emit_graph(g, mui::GraphFormat::graph6) << "\n";
    return 0;
}
