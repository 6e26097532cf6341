#include <iostream>

int main() {
  std::cout << "dualpair: placeholder\n";
  return 0;
}
