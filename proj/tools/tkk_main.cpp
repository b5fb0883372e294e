#include "tkk/rootsys.hpp"
#include <cstdio>
int main() { std::puts("tkk: CLI under construction"); return 0; }
