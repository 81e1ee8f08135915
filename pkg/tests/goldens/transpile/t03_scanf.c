#include <stdio.h>

int main() {
    int a;
    int b;
    double x;
    scanf("%d", &a);
    scanf("%d %d", &a, &b);
    scanf("%lf", &x);
    printf("%d\n", a + b);
    return 0;
}
