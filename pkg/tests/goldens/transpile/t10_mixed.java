import java.util.*;

public class t10_mixed {
    static Scanner scanner = new Scanner(System.in);


    static class Pair {
        int first;
        String name;
    }

    static int doubled(int v) {
        return v * 2;
    }

    public static void main(String[] args) {
        Pair pair = new Pair();
        int value;
        value = scanner.nextInt();
        pair.first = doubled(value);
        System.out.println("pair=" + pair.first);
        return;
    }

}
