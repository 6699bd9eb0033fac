// Case1: m1 -> {a1, a2, a3}, m2 -> {a2}, m3 -> {a3}
public class Case1 {
    private int a1;
    private int a2;
    private int a3;

    public int m1() {
        return a1 + a2 + a3;
    }

    public void m2(  ) {
        a2++;
    }

    public void m3() {
        this.a3 = 0;
    }
}
