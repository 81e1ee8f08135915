using System;

public class t10_mixed
{

    struct Pair {
        int first;
        string name;
    }

    static int doubled(int v) {
        return v * 2;
    }

    static void Main(string[] args) {
        Pair pair;
        int value;
        value = int.Parse(Console.ReadLine());
        pair.first = doubled(value);
        Console.WriteLine("pair=" + pair.first);
        return;
    }

}
