#include <cstdio>

int main() {
  std::puts("relc: placeholder");
  return 0;
}
