using System;

public class t04_functions
{

    static int add(int a, int b) {
        return a + b;
    }

    static double halve(double v) {
        return v / 2;
    }

    static void Main(string[] args) {
        Console.WriteLine(add(2, 3));
        return;
    }

}
