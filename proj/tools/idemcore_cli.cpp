#include <cstdio>

int main() {
    std::puts("idemcore: not wired up yet");
    return 0;
}
