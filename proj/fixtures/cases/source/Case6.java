// Case6: m1 -> {a1, a2, a3}, m2 -> {a2}, m2 => m3
public class Case6 {
    private int a1;
    private int a2;
    private int a3;

    public int m1() {
        return a1 + a2 + a3;
    }

    public void m2() {
        if (a2 > 0) {
            m3();
        }
    }

    public void m3() {
        System.out.println("m3");
    }
}
