#include <stdio.h>

struct Pair {
    int first;
    char name[20];
};

unsigned int doubled(unsigned int v) {
    return v * 2;
}

int main() {
    struct Pair pair;
    int value;
    scanf("%d", &value);
    pair.first = doubled(value);
    printf("pair=%d\n", pair.first);
    return 0;
}
