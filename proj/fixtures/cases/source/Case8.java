// Case8: no fields (utility class), m2 => m3
public class Case8 {
    public static int m1(int x) {
        return x + 1;
    }

    public static int m2(int x) {
        return m3(x) * 2;
    }

    public static int m3(int x) {
        return x - 1;
    }
}
