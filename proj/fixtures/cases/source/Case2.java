// Case2: as Case1, but a3 is static
public class Case2 {
    private int a1;
    private int a2;
    private static int a3;

    public int m1() {
        return a1 + a2 + a3;
    }

    public void m2() {
        a2 = a2 * 2;
    }

    public void m3() {
        Case2.a3 = 1;
    }
}
