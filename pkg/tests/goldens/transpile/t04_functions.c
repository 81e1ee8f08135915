#include <stdio.h>

int add(int a, int b) {
    return a + b;
}

double halve(double v) {
    return v / 2;
}

int main() {
    printf("%d\n", add(2, 3));
    return 0;
}
