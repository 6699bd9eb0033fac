// Case4: m1 -> {a1, a2, a3}, m2 -> {a1}, m3 -> {a2, a3}; a1 lives in Case4Base
public class Case4 extends Case4Base {
    private int a2;
    private int a3;

    public int m1() {
        return a1 + a2 + a3;
    }

    public void m2() {
        this.a1 = -1;
    }

    public int m3() {
        return a2 * a3;
    }
}
