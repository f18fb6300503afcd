#include <cstdio>

int main() {
  std::puts("spherebraid CLI placeholder");
  return 0;
}
