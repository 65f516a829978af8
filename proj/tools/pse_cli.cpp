#include <cstdio>

int main() {
    std::puts("pse cli placeholder");
    return 0;
}
